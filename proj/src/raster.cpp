#include "sketchmatch/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "sketchmatch/errors.hpp"

namespace sketchmatch {
namespace {

constexpr std::int64_t kMaxDim = 1 << 20;
constexpr std::int64_t kMaxPixels = std::int64_t{1} << 26;

bool is_pnm_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

struct Cursor {
    std::string_view data;
    std::size_t pos = 0;

    bool eof() const { return pos >= data.size(); }
    char peek() const { return data[pos]; }

    // Skips whitespace and '#' comments (comment runs to end of line).
    void skip_separators() {
        while (!eof()) {
            if (is_pnm_space(peek())) {
                ++pos;
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    std::int64_t read_number(const char* what) {
        skip_separators();
        if (eof() || peek() < '0' || peek() > '9') {
            throw FormatError(std::string("expected ") + what + " in PNM header");
        }
        std::int64_t value = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (peek() - '0');
            if (value > std::numeric_limits<std::int32_t>::max()) {
                throw FormatError(std::string("PNM ") + what + " out of range");
            }
            ++pos;
        }
        return value;
    }
};

void check_dims(std::int64_t w, std::int64_t h) {
    if (w <= 0 || h <= 0 || w > kMaxDim || h > kMaxDim || w * h > kMaxPixels) {
        throw FormatError("unreasonable PNM dimensions");
    }
}

BinaryImage read_p1(Cursor& cur, int w, int h) {
    BinaryImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            cur.skip_separators();
            if (cur.eof()) throw FormatError("truncated P1 raster");
            char c = cur.peek();
            if (c != '0' && c != '1') throw FormatError("invalid P1 sample");
            ++cur.pos;
            img.set(x, y, c == '1' ? Pixel::Black : Pixel::White);
        }
    }
    return img;
}

GrayImage read_p2(Cursor& cur, int w, int h) {
    std::int64_t maxval = cur.read_number("maxval");
    if (maxval < 1 || maxval > 255) throw FormatError("unsupported PGM maxval");
    GrayImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::int64_t v = cur.read_number("sample");
            if (v > maxval) throw FormatError("P2 sample exceeds maxval");
            img.set(x, y, static_cast<std::uint8_t>(v));
        }
    }
    return img;
}

BinaryImage read_p4(Cursor& cur, int w, int h) {
    if (cur.eof() || !is_pnm_space(cur.peek())) throw FormatError("missing P4 raster separator");
    ++cur.pos;
    const std::size_t row_bytes = (static_cast<std::size_t>(w) + 7) / 8;
    if (cur.data.size() - cur.pos < row_bytes * static_cast<std::size_t>(h)) {
        throw FormatError("truncated P4 raster");
    }
    BinaryImage img(w, h);
    for (int y = 0; y < h; ++y) {
        const unsigned char* row = reinterpret_cast<const unsigned char*>(cur.data.data()) + cur.pos;
        for (int x = 0; x < w; ++x) {
            bool bit = (row[x >> 3] >> (7 - (x & 7))) & 1;
            img.set(x, y, bit ? Pixel::Black : Pixel::White);
        }
        cur.pos += row_bytes;
    }
    return img;
}

GrayImage read_p5(Cursor& cur, int w, int h) {
    std::int64_t maxval = cur.read_number("maxval");
    if (maxval < 1 || maxval > 255) throw FormatError("unsupported PGM maxval");
    if (cur.eof() || !is_pnm_space(cur.peek())) throw FormatError("missing P5 raster separator");
    ++cur.pos;
    const std::size_t total = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    if (cur.data.size() - cur.pos < total) throw FormatError("truncated P5 raster");
    GrayImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            img.set(x, y, static_cast<std::uint8_t>(cur.data[cur.pos++]));
        }
    }
    return img;
}

} // namespace

BinaryImage::BinaryImage(int width, int height, Pixel fill)
    : width_(width),
      height_(height),
      pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
    if (width <= 0 || height <= 0) {
        throw DimensionError("image dimensions must be positive");
    }
}

std::int64_t BinaryImage::count_black() const {
    return std::count(pixels_.begin(), pixels_.end(), Pixel::Black);
}

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width),
      height_(height),
      samples_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
    if (width <= 0 || height <= 0) {
        throw DimensionError("image dimensions must be positive");
    }
}

PnmImage load_pnm(std::string_view bytes) {
    Cursor cur{bytes};
    if (bytes.size() < 2 || bytes[0] != 'P') throw FormatError("not a PNM stream");
    const char kind = bytes[1];
    cur.pos = 2;
    std::int64_t w = cur.read_number("width");
    std::int64_t h = cur.read_number("height");
    check_dims(w, h);
    const int iw = static_cast<int>(w);
    const int ih = static_cast<int>(h);
    switch (kind) {
        case '1': return read_p1(cur, iw, ih);
        case '2': return read_p2(cur, iw, ih);
        case '4': return read_p4(cur, iw, ih);
        case '5': return read_p5(cur, iw, ih);
        default: throw FormatError("unsupported PNM magic");
    }
}

std::string save_pnm(const BinaryImage& img) {
    std::string out = "P1\n";
    out += std::to_string(img.width());
    out += ' ';
    out += std::to_string(img.height());
    out += '\n';
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            if (x > 0) out += ' ';
            out += img.black(x, y) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

std::string save_pgm(const GrayImage& img) {
    std::string out = "P2\n";
    out += std::to_string(img.width());
    out += ' ';
    out += std::to_string(img.height());
    out += "\n255\n";
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            if (x > 0) out += ' ';
            out += std::to_string(img.at(x, y));
        }
        out += '\n';
    }
    return out;
}

BinaryImage binarize(const GrayImage& gray, int threshold) {
    BinaryImage img(gray.width(), gray.height());
    for (int y = 0; y < gray.height(); ++y) {
        for (int x = 0; x < gray.width(); ++x) {
            img.set(x, y, gray.at(x, y) < threshold ? Pixel::Black : Pixel::White);
        }
    }
    return img;
}

BinaryImage to_binary(const PnmImage& img, int threshold) {
    if (const auto* bin = std::get_if<BinaryImage>(&img)) return *bin;
    return binarize(std::get<GrayImage>(img), threshold);
}

Centroid centroid(const BinaryImage& img) {
    Centroid c;
    for (int y = 0; y < img.height(); ++y) {
        const Pixel* row = img.row(y);
        for (int x = 0; x < img.width(); ++x) {
            if (row[x] == Pixel::Black) {
                c.sum_x += x;
                c.sum_y += y;
                ++c.count;
            }
        }
    }
    if (c.count == 0) {
        throw EmptyForegroundError("centroid of an image with no black pixels");
    }
    return c;
}

BinaryImage normalize(const BinaryImage& img, int canvas_width, int canvas_height, int margin) {
    if (margin < 0 || canvas_width <= 2 * margin || canvas_height <= 2 * margin) {
        throw DimensionError("canvas too small for the requested margin");
    }
    int min_x = img.width(), max_x = -1, min_y = img.height(), max_y = -1;
    for (int y = 0; y < img.height(); ++y) {
        const Pixel* row = img.row(y);
        for (int x = 0; x < img.width(); ++x) {
            if (row[x] == Pixel::Black) {
                min_x = std::min(min_x, x);
                max_x = std::max(max_x, x);
                min_y = std::min(min_y, y);
                max_y = std::max(max_y, y);
            }
        }
    }
    if (max_x < 0) {
        throw EmptyForegroundError("cannot normalize an image with no black pixels");
    }
    const int bb_w = max_x - min_x + 1;
    const int bb_h = max_y - min_y + 1;
    const double s = std::min(static_cast<double>(canvas_width - 2 * margin) / bb_w,
                              static_cast<double>(canvas_height - 2 * margin) / bb_h);
    const int scaled_w = std::max(1, static_cast<int>(std::llround(bb_w * s)));
    const int scaled_h = std::max(1, static_cast<int>(std::llround(bb_h * s)));
    const int off_x = (canvas_width - scaled_w) / 2;
    const int off_y = (canvas_height - scaled_h) / 2;

    BinaryImage out(canvas_width, canvas_height);
    for (int ty = 0; ty < scaled_h; ++ty) {
        const int sy = min_y + std::min(bb_h - 1, static_cast<int>((ty + 0.5) * bb_h / scaled_h));
        for (int tx = 0; tx < scaled_w; ++tx) {
            const int sx = min_x + std::min(bb_w - 1, static_cast<int>((tx + 0.5) * bb_w / scaled_w));
            if (img.black(sx, sy)) {
                out.set(off_x + tx, off_y + ty, Pixel::Black);
            }
        }
    }
    return out;
}

BinaryImage translate(const BinaryImage& img, int dx, int dy) {
    BinaryImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        const Pixel* row = img.row(y);
        for (int x = 0; x < img.width(); ++x) {
            if (row[x] == Pixel::Black && out.in_frame(x + dx, y + dy)) {
                out.set(x + dx, y + dy, Pixel::Black);
            }
        }
    }
    return out;
}

} // namespace sketchmatch
