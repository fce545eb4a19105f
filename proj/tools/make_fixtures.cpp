// Generates the bundled recognizer-font fixtures: two hand-made pixel
// font styles, 26 uppercase glyphs each, persisted as template sets.
// Usage: make_fixtures <output-root>   (writes <root>/block and <root>/stroke)

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "sketchmatch/raster.hpp"
#include "sketchmatch/sketch.hpp"
#include "sketchmatch/templates.hpp"

using namespace sketchmatch;

namespace {

constexpr int kCellScale = 8; // block font: 5x7 cells -> 40x56 pixels

struct BlockGlyph {
    char label;
    std::array<const char*, 7> rows; // 5 chars each, '#' = black
};

// Classic 5x7 dot-matrix patterns. Every glyph has ink in the first and
// last row, so the scaled bounding box is exactly 56 pixels tall and
// normalization onto the 64x64 canvas is a pure recentering.
const BlockGlyph kBlockFont[26] = {
    {'A', {".###.", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"}},
    {'B', {"####.", "#...#", "#...#", "####.", "#...#", "#...#", "####."}},
    {'C', {".###.", "#...#", "#....", "#....", "#....", "#...#", ".###."}},
    {'D', {"###..", "#..#.", "#...#", "#...#", "#...#", "#..#.", "###.."}},
    {'E', {"#####", "#....", "#....", "####.", "#....", "#....", "#####"}},
    {'F', {"#####", "#....", "#....", "####.", "#....", "#....", "#...."}},
    {'G', {".###.", "#...#", "#....", "#.###", "#...#", "#...#", ".####"}},
    {'H', {"#...#", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"}},
    {'I', {".###.", "..#..", "..#..", "..#..", "..#..", "..#..", ".###."}},
    {'J', {"..###", "...#.", "...#.", "...#.", "...#.", "#..#.", ".##.."}},
    {'K', {"#...#", "#..#.", "#.#..", "##...", "#.#..", "#..#.", "#...#"}},
    {'L', {"#....", "#....", "#....", "#....", "#....", "#....", "#####"}},
    {'M', {"#...#", "##.##", "#.#.#", "#.#.#", "#...#", "#...#", "#...#"}},
    {'N', {"#...#", "#...#", "##..#", "#.#.#", "#..##", "#...#", "#...#"}},
    {'O', {".###.", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."}},
    {'P', {"####.", "#...#", "#...#", "####.", "#....", "#....", "#...."}},
    {'Q', {".###.", "#...#", "#...#", "#...#", "#.#.#", "#..#.", ".##.#"}},
    {'R', {"####.", "#...#", "#...#", "####.", "#.#..", "#..#.", "#...#"}},
    {'S', {".####", "#....", "#....", ".###.", "....#", "....#", "####."}},
    {'T', {"#####", "..#..", "..#..", "..#..", "..#..", "..#..", "..#.."}},
    {'U', {"#...#", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."}},
    {'V', {"#...#", "#...#", "#...#", "#...#", "#...#", ".#.#.", "..#.."}},
    {'W', {"#...#", "#...#", "#...#", "#.#.#", "#.#.#", "#.#.#", ".#.#."}},
    {'X', {"#...#", "#...#", ".#.#.", "..#..", ".#.#.", "#...#", "#...#"}},
    {'Y', {"#...#", "#...#", "#...#", ".#.#.", "..#..", "..#..", "..#.."}},
    {'Z', {"#####", "....#", "...#.", "..#..", ".#...", "#....", "#####"}},
};

struct Segment {
    int x0, y0, x1, y1;
};

struct StrokeGlyph {
    char label;
    std::vector<Segment> segments;
};

// Thin stick font drawn with a 2x2 brush on a 36x56 box (coordinates
// 0..34 x 0..54 plus brush spill). Bowls of B/D/P/R stop short of the
// glyph's right edge at the top, J's hook stops short at the bottom,
// which is what gives serif-like elongations a one-sided bounding box.
const StrokeGlyph kStrokeFont[26] = {
    {'A', {{0, 54, 17, 0}, {17, 0, 34, 54}, {8, 36, 26, 36}}},
    {'B',
     {{0, 0, 0, 54},
      {0, 0, 24, 0},
      {24, 0, 30, 6},
      {30, 6, 30, 20},
      {30, 20, 24, 26},
      {0, 26, 24, 26},
      {24, 26, 33, 33},
      {33, 33, 33, 47},
      {33, 47, 24, 54},
      {0, 54, 24, 54}}},
    {'C',
     {{33, 8, 24, 0},
      {24, 0, 10, 0},
      {10, 0, 0, 9},
      {0, 9, 0, 45},
      {0, 45, 10, 54},
      {10, 54, 24, 54},
      {24, 54, 33, 46}}},
    {'D',
     {{0, 0, 0, 54}, {0, 0, 21, 0}, {21, 0, 33, 12}, {33, 12, 33, 42}, {33, 42, 21, 54}, {0, 54, 21, 54}}},
    {'E', {{0, 0, 0, 54}, {0, 0, 33, 0}, {0, 26, 23, 26}, {0, 54, 33, 54}}},
    {'F', {{0, 0, 0, 54}, {0, 0, 33, 0}, {0, 26, 23, 26}}},
    {'G',
     {{33, 8, 24, 0},
      {24, 0, 10, 0},
      {10, 0, 0, 9},
      {0, 9, 0, 45},
      {0, 45, 10, 54},
      {10, 54, 25, 54},
      {25, 54, 33, 46},
      {33, 46, 33, 30},
      {33, 30, 20, 30}}},
    {'H', {{0, 0, 0, 54}, {33, 0, 33, 54}, {0, 27, 33, 27}}},
    {'I', {{8, 0, 25, 0}, {16, 0, 16, 54}, {8, 54, 25, 54}}},
    {'J', {{12, 0, 29, 0}, {29, 0, 29, 44}, {29, 44, 21, 54}, {21, 54, 8, 54}, {8, 54, 0, 46}}},
    {'K', {{0, 0, 0, 54}, {31, 0, 0, 29}, {10, 21, 33, 54}}},
    {'L', {{0, 0, 0, 54}, {0, 54, 31, 54}}},
    {'M', {{0, 54, 0, 0}, {0, 0, 16, 28}, {33, 0, 16, 28}, {33, 0, 33, 54}}},
    {'N', {{0, 54, 0, 0}, {0, 0, 33, 54}, {33, 54, 33, 0}}},
    {'O',
     {{10, 0, 24, 0},
      {24, 0, 33, 9},
      {33, 9, 33, 45},
      {33, 45, 24, 54},
      {24, 54, 10, 54},
      {10, 54, 0, 45},
      {0, 45, 0, 9},
      {0, 9, 10, 0}}},
    {'P',
     {{0, 0, 0, 54}, {0, 0, 23, 0}, {23, 0, 31, 8}, {31, 8, 31, 19}, {31, 19, 23, 27}, {23, 27, 0, 27}}},
    {'Q',
     {{10, 0, 24, 0},
      {24, 0, 33, 9},
      {33, 9, 33, 45},
      {33, 45, 24, 54},
      {24, 54, 10, 54},
      {10, 54, 0, 45},
      {0, 45, 0, 9},
      {0, 9, 10, 0},
      {22, 40, 33, 54}}},
    {'R',
     {{0, 0, 0, 54},
      {0, 0, 23, 0},
      {23, 0, 31, 8},
      {31, 8, 31, 19},
      {31, 19, 23, 27},
      {23, 27, 0, 27},
      {18, 27, 33, 54}}},
    {'S',
     {{33, 7, 25, 0},
      {25, 0, 8, 0},
      {8, 0, 0, 7},
      {0, 7, 0, 19},
      {0, 19, 8, 26},
      {8, 26, 25, 26},
      {25, 26, 33, 33},
      {33, 33, 33, 47},
      {33, 47, 25, 54},
      {25, 54, 8, 54},
      {8, 54, 0, 47}}},
    {'T', {{0, 0, 33, 0}, {16, 0, 16, 54}}},
    {'U', {{0, 0, 0, 45}, {0, 45, 9, 54}, {9, 54, 24, 54}, {24, 54, 33, 45}, {33, 0, 33, 45}}},
    {'V', {{0, 0, 16, 54}, {16, 54, 33, 0}}},
    {'W', {{0, 0, 7, 54}, {7, 54, 16, 22}, {16, 22, 25, 54}, {25, 54, 33, 0}}},
    {'X', {{0, 0, 33, 54}, {33, 0, 0, 54}}},
    {'Y', {{0, 0, 16, 26}, {33, 0, 16, 26}, {16, 26, 16, 54}}},
    {'Z', {{0, 0, 33, 0}, {33, 0, 0, 54}, {0, 54, 33, 54}}},
};

BinaryImage raster_block(const BlockGlyph& glyph) {
    BinaryImage img(5 * kCellScale, 7 * kCellScale);
    for (int cy = 0; cy < 7; ++cy) {
        for (int cx = 0; cx < 5; ++cx) {
            if (glyph.rows[cy][cx] != '#') continue;
            for (int y = 0; y < kCellScale; ++y) {
                for (int x = 0; x < kCellScale; ++x) {
                    img.set(cx * kCellScale + x, cy * kCellScale + y, Pixel::Black);
                }
            }
        }
    }
    return img;
}

void stamp(BinaryImage& img, int x, int y) {
    for (int dy = 0; dy < 2; ++dy) {
        for (int dx = 0; dx < 2; ++dx) {
            if (img.in_frame(x + dx, y + dy)) img.set(x + dx, y + dy, Pixel::Black);
        }
    }
}

void draw_segment(BinaryImage& img, const Segment& s) {
    int x = s.x0, y = s.y0;
    const int dx = std::abs(s.x1 - s.x0), sx = s.x0 < s.x1 ? 1 : -1;
    const int dy = -std::abs(s.y1 - s.y0), sy = s.y0 < s.y1 ? 1 : -1;
    int err = dx + dy;
    while (true) {
        stamp(img, x, y);
        if (x == s.x1 && y == s.y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y += sy;
        }
    }
}

BinaryImage raster_stroke(const StrokeGlyph& glyph) {
    BinaryImage img(36, 56);
    for (const Segment& s : glyph.segments) draw_segment(img, s);
    return img;
}

template <typename Font, typename Raster>
void write_style(const std::string& name, const Font& font, Raster raster,
                 const std::string& out_root) {
    IngestParams params;
    params.name = name;
    params.bias = Bias(0.4);
    params.canvas_width = 64;
    params.canvas_height = 64;
    params.margin = 4;

    std::vector<std::pair<std::string, BinaryImage>> glyphs;
    for (const auto& glyph : font) {
        glyphs.emplace_back(std::string(1, glyph.label), raster(glyph));
    }
    const TemplateSet set = build_set(params, std::move(glyphs));
    if (set.entries.size() != 26) {
        std::fprintf(stderr, "%s: expected 26 entries, got %zu\n", name.c_str(),
                     set.entries.size());
        std::exit(1);
    }
    save_set(set, out_root + "/" + name);
    std::printf("%s: 26 glyphs -> %s/%s\n", name.c_str(), out_root.c_str(), name.c_str());
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: make_fixtures <output-root>\n");
        return 1;
    }
    const std::string out_root = argv[1];
    write_style("block", kBlockFont, raster_block, out_root);
    write_style("stroke", kStrokeFont, raster_stroke, out_root);
    return 0;
}
