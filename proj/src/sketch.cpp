#include "sketchmatch/sketch.hpp"

#include <algorithm>
#include <cmath>

namespace sketchmatch {
namespace {

// Shared scratch masks for one extraction; avoids building sorted sets
// until all passes have run.
struct PointMasks {
    int width;
    int height;
    std::vector<std::uint8_t> black;
    std::vector<std::uint8_t> white;

    PointMasks(int w, int h)
        : width(w), height(h),
          black(static_cast<std::size_t>(w) * h, 0),
          white(static_cast<std::size_t>(w) * h, 0) {}

    void mark(int x, int y, Pixel color) {
        auto idx = static_cast<std::size_t>(y) * width + x;
        (color == Pixel::Black ? black : white)[idx] = 1;
    }
};

void scan_line(std::span<const Pixel> line, Pixel color, Orientation orientation, int line_index,
               Bias bias, PointMasks& masks) {
    for (const Run& run : find_runs(line, color, orientation, line_index)) {
        const Span seg = run_to_segment(run, bias);
        for (int i = seg.start; i <= seg.end; ++i) {
            if (orientation == Orientation::Horizontal) {
                masks.mark(i, line_index, color);
            } else {
                masks.mark(line_index, i, color);
            }
        }
    }
}

std::vector<Point> collect(const std::vector<std::uint8_t>& mask, int width, int height) {
    std::vector<Point> points;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            if (mask[static_cast<std::size_t>(y) * width + x]) {
                points.push_back(Point{x, y});
            }
        }
    }
    std::sort(points.begin(), points.end());
    return points;
}

} // namespace

std::vector<Run> find_runs(std::span<const Pixel> line, Pixel color, Orientation orientation,
                           int line_index) {
    std::vector<Run> runs;
    const int n = static_cast<int>(line.size());
    int i = 0;
    while (i < n) {
        if (line[i] != color) {
            ++i;
            continue;
        }
        const int start = i;
        while (i < n && line[i] == color) ++i;
        const int end = i - 1;
        // Interior-white rule: white spans touching the frame are background.
        if (color == Pixel::White && (start == 0 || end == n - 1)) continue;
        runs.push_back(Run{line_index, start, end, orientation, color});
    }
    return runs;
}

Span run_to_segment(const Run& run, Bias bias) {
    const int median = (run.start + run.end) / 2;
    const int width = std::max<int>(1, static_cast<int>(std::llround(bias.value * run.length())));
    Span seg{median - (width - 1) / 2, median + width / 2};
    seg.start = std::max(seg.start, run.start);
    seg.end = std::min(seg.end, run.end);
    return seg;
}

Sketch extract_sketch(const BinaryImage& img, Bias bias, Directions directions) {
    if (!directions.any()) {
        throw std::invalid_argument("at least one sketch direction required");
    }
    PointMasks masks(img.width(), img.height());

    if (directions.horizontal_black || directions.horizontal_white) {
        for (int y = 0; y < img.height(); ++y) {
            std::span<const Pixel> row(img.row(y), static_cast<std::size_t>(img.width()));
            if (directions.horizontal_black) {
                scan_line(row, Pixel::Black, Orientation::Horizontal, y, bias, masks);
            }
            if (directions.horizontal_white) {
                scan_line(row, Pixel::White, Orientation::Horizontal, y, bias, masks);
            }
        }
    }
    if (directions.vertical_black || directions.vertical_white) {
        std::vector<Pixel> column(static_cast<std::size_t>(img.height()));
        for (int x = 0; x < img.width(); ++x) {
            for (int y = 0; y < img.height(); ++y) column[y] = img.at(x, y);
            if (directions.vertical_black) {
                scan_line(column, Pixel::Black, Orientation::Vertical, x, bias, masks);
            }
            if (directions.vertical_white) {
                scan_line(column, Pixel::White, Orientation::Vertical, x, bias, masks);
            }
        }
    }

    Sketch sketch;
    sketch.width = img.width();
    sketch.height = img.height();
    sketch.bias_used = bias;
    sketch.black_points = collect(masks.black, img.width(), img.height());
    sketch.white_points = collect(masks.white, img.width(), img.height());
    return sketch;
}

GrayImage render_sketch(const Sketch& sketch) {
    GrayImage out(sketch.width, sketch.height, 128);
    for (const Point& p : sketch.black_points) out.set(p.x, p.y, 0);
    for (const Point& p : sketch.white_points) out.set(p.x, p.y, 255);
    return out;
}

} // namespace sketchmatch
