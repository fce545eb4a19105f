#include "sketchmatch/matcher.hpp"

#include <algorithm>

#include "sketchmatch/errors.hpp"

namespace sketchmatch {
namespace {

// Round half away from zero of the exact rational num/den, den > 0.
std::int64_t round_rational(__int128 num, __int128 den) {
    if (num >= 0) {
        return static_cast<std::int64_t>((2 * num + den) / (2 * den));
    }
    return -static_cast<std::int64_t>((-2 * num + den) / (2 * den));
}

} // namespace

Shift gravity_shift(const Centroid& target, const Centroid& source) {
    const __int128 den = static_cast<__int128>(target.count) * source.count;
    const __int128 num_x = static_cast<__int128>(target.sum_x) * source.count -
                           static_cast<__int128>(source.sum_x) * target.count;
    const __int128 num_y = static_cast<__int128>(target.sum_y) * source.count -
                           static_cast<__int128>(source.sum_y) * target.count;
    return Shift{static_cast<int>(round_rational(num_x, den)),
                 static_cast<int>(round_rational(num_y, den))};
}

double accuracy_percent(std::int64_t w, std::int64_t n_w, std::int64_t b, std::int64_t n_b) {
    if (n_w == 0 && n_b == 0) return 0.0;
    if (n_w == 0) return 100.0 * static_cast<double>(b) / static_cast<double>(n_b);
    if (n_b == 0) return 100.0 * static_cast<double>(w) / static_cast<double>(n_w);
    return 50.0 * (static_cast<double>(w) / static_cast<double>(n_w) +
                   static_cast<double>(b) / static_cast<double>(n_b));
}

MatchScore match_score(const Sketch& sketch, const Centroid& sketch_source,
                       const BinaryImage& target, ShiftPolicy policy) {
    if (sketch.width != target.width() || sketch.height != target.height()) {
        throw DimensionError("sketch extent does not match target extent");
    }
    const Centroid target_centroid = centroid(target); // rejects empty foregrounds
    const Shift d = policy == ShiftPolicy::Gravity ? gravity_shift(target_centroid, sketch_source)
                                                   : Shift{0, 0};

    MatchScore score;
    score.n_b = static_cast<std::int64_t>(sketch.black_points.size());
    score.n_w = static_cast<std::int64_t>(sketch.white_points.size());
    for (const Point& p : sketch.black_points) {
        const int x = p.x + d.dx;
        const int y = p.y + d.dy;
        if (target.in_frame(x, y) && target.black(x, y)) ++score.b;
    }
    for (const Point& p : sketch.white_points) {
        const int x = p.x + d.dx;
        const int y = p.y + d.dy;
        // Out-of-frame samples count as white: background extends past the frame.
        if (!target.in_frame(x, y) || !target.black(x, y)) ++score.w;
    }
    score.accuracy = accuracy_percent(score.w, score.n_w, score.b, score.n_b);
    return score;
}

Ranking classify(const BinaryImage& query, const TemplateSet& templates, ShiftPolicy policy) {
    if (templates.entries.empty()) {
        throw ConfigError("cannot classify against an empty template set");
    }
    if (query.width() != templates.canvas_width || query.height() != templates.canvas_height) {
        throw DimensionError("query is not on the template set's canvas");
    }
    Ranking ranking;
    ranking.reserve(templates.entries.size());
    for (const TemplateEntry& entry : templates.entries) {
        ranking.push_back(RankedMatch{entry.label, match_score(entry.sketch, entry.centroid, query, policy)});
    }
    std::sort(ranking.begin(), ranking.end(), [](const RankedMatch& a, const RankedMatch& b) {
        if (a.score.accuracy != b.score.accuracy) return a.score.accuracy > b.score.accuracy;
        return a.label < b.label;
    });
    return ranking;
}

} // namespace sketchmatch
