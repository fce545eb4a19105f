#ifndef SKETCHMATCH_SKETCH_HPP
#define SKETCHMATCH_SKETCH_HPP

#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

#include "sketchmatch/raster.hpp"

namespace sketchmatch {

/// Fraction in (0, 1] scaling each run's width into its sketch segment.
/// Bias 1 keeps the whole run; small values narrow it toward the median.
struct Bias {
    static constexpr double kDefault = 0.4;

    double value = kDefault;

    Bias() = default;
    explicit Bias(double v) : value(v) {
        if (!(v > 0.0) || v > 1.0) {
            throw std::invalid_argument("bias must satisfy 0 < bias <= 1");
        }
    }

    bool operator==(const Bias&) const = default;
};

enum class Orientation : std::uint8_t { Horizontal, Vertical };

/// Maximal same-color pixel span along one row or column.
/// start/end are inclusive indices along the line.
struct Run {
    int line_index = 0;
    int start = 0;
    int end = 0;
    Orientation orientation = Orientation::Horizontal;
    Pixel color = Pixel::Black;

    int length() const { return end - start + 1; }
};

/// Inclusive index interval along a line.
struct Span {
    int start = 0;
    int end = 0;

    bool operator==(const Span&) const = default;
};

struct Point {
    int x = 0;
    int y = 0;

    auto operator<=>(const Point&) const = default;
};

/// Which of the four scan passes contribute to a sketch.
struct Directions {
    bool horizontal_black = false;
    bool horizontal_white = false;
    bool vertical_black = false;
    bool vertical_white = false;

    static Directions all() { return {true, true, true, true}; }
    bool any() const {
        return horizontal_black || horizontal_white || vertical_black || vertical_white;
    }
};

/// Two disjoint point sets derived from run midpoints; the matchable
/// feature of an image. Point lists are sorted and deduplicated, so equal
/// sketches compare equal. N_b = black_points.size(), N_w = white_points.size().
struct Sketch {
    int width = 0;
    int height = 0;
    std::vector<Point> black_points;
    std::vector<Point> white_points;
    Bias bias_used;

    bool operator==(const Sketch&) const = default;
};

/// Maximal runs of `color` along a line, in left-to-right order.
/// White runs touching either end of the line are background, not
/// character structure, and are omitted; black runs are always kept.
std::vector<Run> find_runs(std::span<const Pixel> line, Pixel color,
                           Orientation orientation = Orientation::Horizontal,
                           int line_index = 0);

/// Bias-scaled segment centered on the run's median point:
///   m = floor((start + end) / 2)
///   w = max(1, round(bias * length))   (round half away from zero)
///   segment = [m - floor((w-1)/2), m + ceil((w-1)/2)], clamped into the run.
Span run_to_segment(const Run& run, Bias bias);

/// Runs the selected scan passes over rows and columns and merges the
/// resulting segment pixels into the sketch point sets (set union).
Sketch extract_sketch(const BinaryImage& img, Bias bias, Directions directions = Directions::all());

/// Gray rendering of a sketch: background 128, black points 0, white
/// points 255. Suitable for saving as PGM.
GrayImage render_sketch(const Sketch& sketch);

} // namespace sketchmatch

#endif
