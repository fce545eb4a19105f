#ifndef SKETCHMATCH_MATCHER_HPP
#define SKETCHMATCH_MATCHER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sketchmatch/raster.hpp"
#include "sketchmatch/sketch.hpp"
#include "sketchmatch/templates.hpp"

namespace sketchmatch {

/// Integer pixel offset aligning a sketch frame with a target image.
struct Shift {
    int dx = 0;
    int dy = 0;

    bool operator==(const Shift&) const = default;
};

/// Whether matching aligns centers of gravity or samples in place.
enum class ShiftPolicy { Gravity, None };

/// Per-comparison tally: matched/total white points, matched/total black
/// points, and the combined accuracy percentage.
struct MatchScore {
    std::int64_t w = 0;
    std::int64_t n_w = 0;
    std::int64_t b = 0;
    std::int64_t n_b = 0;
    double accuracy = 0.0;

    bool operator==(const MatchScore&) const = default;
};

struct RankedMatch {
    std::string label;
    MatchScore score;
};

/// Full classification result, descending by accuracy; ties broken by
/// ascending label codepoint. The top entry is the recognized label.
using Ranking = std::vector<RankedMatch>;

/// Centroid difference rounded half away from zero per axis:
/// dx = round(target.cx - source.cx), dy likewise. Computed on the exact
/// rational centroids, so shifting an image by an integer offset shifts
/// the result by exactly that offset.
Shift gravity_shift(const Centroid& target, const Centroid& source);

/// accuracy = (w/N_w + b/N_b) / 2 * 100. A term with a zero denominator
/// is dropped and its weight given to the other; 0 when both are zero.
double accuracy_percent(std::int64_t w, std::int64_t n_w, std::int64_t b, std::int64_t n_b);

/// Samples every sketch point against the target at p + d, where
/// d = gravity_shift(centroid(target), sketch_source) (or zero under
/// ShiftPolicy::None). A black point matches when the sampled pixel is
/// in frame and black; a white point matches when it is white, with
/// out-of-frame samples counting as white. Throws DimensionError when
/// sketch and target extents differ, EmptyForegroundError when the
/// target has no black pixels.
MatchScore match_score(const Sketch& sketch, const Centroid& sketch_source,
                       const BinaryImage& target, ShiftPolicy policy = ShiftPolicy::Gravity);

/// Scores the query against every template entry and returns the full
/// ranking. Throws ConfigError on an empty set, DimensionError when the
/// query is not on the set's canvas.
Ranking classify(const BinaryImage& query, const TemplateSet& templates,
                 ShiftPolicy policy = ShiftPolicy::Gravity);

} // namespace sketchmatch

#endif
