#ifndef SKETCHMATCH_RASTER_HPP
#define SKETCHMATCH_RASTER_HPP

#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sketchmatch {

/// Pixel polarity follows the PBM convention: 1 = Black = foreground.
/// Note this inverts the usual display intuition where 1 would be bright.
enum class Pixel : std::uint8_t { White = 0, Black = 1 };

/// Rectangular black/white raster. Row-major storage, x = column, y = row,
/// origin at the top-left, pixel centers at integer coordinates.
class BinaryImage {
public:
    BinaryImage(int width, int height, Pixel fill = Pixel::White);

    int width() const { return width_; }
    int height() const { return height_; }

    bool in_frame(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    Pixel at(int x, int y) const {
        assert(in_frame(x, y));
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }

    bool black(int x, int y) const { return at(x, y) == Pixel::Black; }

    void set(int x, int y, Pixel p) {
        assert(in_frame(x, y));
        pixels_[static_cast<std::size_t>(y) * width_ + x] = p;
    }

    /// Contiguous row-major pixel storage.
    const std::vector<Pixel>& pixels() const { return pixels_; }

    /// Pointer to the first pixel of row y.
    const Pixel* row(int y) const {
        assert(y >= 0 && y < height_);
        return pixels_.data() + static_cast<std::size_t>(y) * width_;
    }

    std::int64_t count_black() const;

    bool operator==(const BinaryImage&) const = default;

private:
    int width_;
    int height_;
    std::vector<Pixel> pixels_;
};

/// 8-bit grayscale raster, same layout conventions as BinaryImage.
class GrayImage {
public:
    GrayImage(int width, int height, std::uint8_t fill = 0);

    int width() const { return width_; }
    int height() const { return height_; }

    std::uint8_t at(int x, int y) const {
        assert(x >= 0 && x < width_ && y >= 0 && y < height_);
        return samples_[static_cast<std::size_t>(y) * width_ + x];
    }

    void set(int x, int y, std::uint8_t v) {
        assert(x >= 0 && x < width_ && y >= 0 && y < height_);
        samples_[static_cast<std::size_t>(y) * width_ + x] = v;
    }

    const std::vector<std::uint8_t>& samples() const { return samples_; }

    bool operator==(const GrayImage&) const = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> samples_;
};

/// Center of gravity of the black pixels, kept as an exact rational
/// (coordinate sums over the pixel count) so translation by an integer
/// offset is exact. cx()/cy() expose the usual fractional coordinates.
struct Centroid {
    std::int64_t sum_x = 0;
    std::int64_t sum_y = 0;
    std::int64_t count = 0;

    double cx() const { return static_cast<double>(sum_x) / static_cast<double>(count); }
    double cy() const { return static_cast<double>(sum_y) / static_cast<double>(count); }

    /// Centroid of the same pixel set translated by (dx, dy).
    Centroid translated(int dx, int dy) const {
        return Centroid{sum_x + count * dx, sum_y + count * dy, count};
    }

    bool operator==(const Centroid&) const = default;
};

using PnmImage = std::variant<BinaryImage, GrayImage>;

/// Parses a PBM (P1/P4) or PGM (P2/P5) stream. PBM value 1 maps to Black.
/// PGM maxval above 255 is rejected. Throws FormatError on malformed or
/// truncated input.
PnmImage load_pnm(std::string_view bytes);

/// Canonical P1 writer: single spaces between samples, one image row per
/// line. load_pnm(save_pnm(img)) reproduces img bit-exactly.
std::string save_pnm(const BinaryImage& img);

/// Canonical P2 writer (maxval 255), same layout rules as save_pnm.
std::string save_pgm(const GrayImage& img);

/// Sample < threshold becomes Black, everything else White.
BinaryImage binarize(const GrayImage& gray, int threshold);

/// Returns the PBM/PGM variant reduced to a BinaryImage, binarizing
/// grayscale input at `threshold`.
BinaryImage to_binary(const PnmImage& img, int threshold);

/// Mean coordinate of the black pixels. Throws EmptyForegroundError when
/// the image has none.
Centroid centroid(const BinaryImage& img);

/// Crops to the black bounding box, scales by
/// s = min((canvas_w - 2*margin) / bb_w, (canvas_h - 2*margin) / bb_h)
/// with nearest-neighbor sampling, and centers the result on a white
/// canvas of the requested size. Throws EmptyForegroundError on blank
/// input and DimensionError when the canvas cannot hold the margin.
BinaryImage normalize(const BinaryImage& img, int canvas_width, int canvas_height, int margin);

/// Moves every black pixel by (dx, dy); pixels leaving the frame are
/// dropped, vacated pixels become White. Dimensions are unchanged.
BinaryImage translate(const BinaryImage& img, int dx, int dy);

} // namespace sketchmatch

#endif
