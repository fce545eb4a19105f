#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sketchmatch/errors.hpp"
#include "sketchmatch/matcher.hpp"
#include "sketchmatch/templates.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace sketchmatch;

namespace {

// Small synthetic template set; build_set normalizes the glyphs.
TemplateSet bar_and_square_set() {
    IngestParams params;
    params.name = "shapes";
    params.bias = Bias(0.4);
    params.canvas_width = 16;
    params.canvas_height = 16;
    params.margin = 2;

    BinaryImage bar(8, 8);
    for (int y = 0; y < 8; ++y) bar.set(3, y, Pixel::Black);
    BinaryImage square(8, 8);
    for (int y = 2; y < 6; ++y) {
        for (int x = 2; x < 6; ++x) square.set(x, y, Pixel::Black);
    }
    return build_set(params, {{"|", bar}, {"#", square}});
}

} // namespace

TEST_CASE("gravity_shift rounds the centroid difference half away from zero") {
    const Centroid same{51, 25, 5};
    CHECK(gravity_shift(same, same) == Shift{0, 0});

    // target (10.2, 5.0) vs source (8.0, 5.0): 2.2 rounds to 2.
    const Centroid target{51, 25, 5};
    const Centroid source{40, 25, 5};
    CHECK(gravity_shift(target, source) == Shift{2, 0});

    // Exact halves round away from zero on both sides.
    CHECK(gravity_shift(Centroid{5, 0, 2}, Centroid{0, 0, 2}) == Shift{3, 0});
    CHECK(gravity_shift(Centroid{0, 0, 2}, Centroid{5, 0, 2}) == Shift{-3, 0});
    CHECK(gravity_shift(Centroid{0, -5, 2}, Centroid{0, 0, 2}) == Shift{0, -3});
}

TEST_CASE("gravity_shift of a translated image is the translation") {
    SplitMix64 rng(47);
    for (int i = 0; i < 20; ++i) {
        BinaryImage img(20, 20);
        for (int y = 6; y < 14; ++y) {
            for (int x = 6; x < 14; ++x) {
                if (rng.next_unit() < 0.5) img.set(x, y, Pixel::Black);
            }
        }
        if (img.count_black() == 0) img.set(7, 7, Pixel::Black);
        const BinaryImage moved = translate(img, 4, -3);
        CHECK(gravity_shift(centroid(moved), centroid(img)) == Shift{4, -3});
    }
}

TEST_CASE("accuracy_percent evaluates the combined formula") {
    CHECK(accuracy_percent(3, 4, 5, 5) == 87.5);
    CHECK(accuracy_percent(0, 4, 0, 5) == 0.0);
    CHECK(accuracy_percent(4, 4, 5, 5) == 100.0);
    // A zero denominator drops its term and gives full weight to the other.
    CHECK(accuracy_percent(0, 0, 5, 5) == 100.0);
    CHECK(accuracy_percent(2, 4, 0, 0) == 50.0);
    CHECK(accuracy_percent(0, 0, 0, 0) == 0.0);
}

TEST_CASE("self-match scores exactly 100") {
    SplitMix64 rng(53);
    for (double bias : {0.25, 0.5, 1.0}) {
        const BinaryImage img = smtest::with_foreground(smtest::random_image(rng, 24, 24));
        const MatchScore score =
            match_score(extract_sketch(img, Bias(bias)), centroid(img), img);
        CHECK(score.accuracy == 100.0);
        CHECK(score.w == score.n_w);
        CHECK(score.b == score.n_b);
    }
}

TEST_CASE("self-match under pure translation stays 100") {
    SplitMix64 rng(59);
    BinaryImage img(24, 24);
    for (int y = 8; y < 16; ++y) {
        for (int x = 8; x < 16; ++x) {
            if (rng.next_unit() < 0.5) img.set(x, y, Pixel::Black);
        }
    }
    if (img.count_black() == 0) img.set(9, 9, Pixel::Black);
    for (const auto [dx, dy] : {std::pair{3, 0}, {0, 2}, {5, 4}, {-4, -3}}) {
        const MatchScore score =
            match_score(extract_sketch(img, Bias(0.4)), centroid(img), translate(img, dx, dy));
        CHECK(score.accuracy == 100.0);
    }
}

TEST_CASE("match counts agree with exhaustive enumeration") {
    SplitMix64 rng(61);
    for (int i = 0; i < 30; ++i) {
        const BinaryImage source = smtest::with_foreground(smtest::random_image(rng, 16, 16));
        const BinaryImage target = smtest::with_foreground(smtest::random_image(rng, 16, 16));
        const Sketch sketch = extract_sketch(source, Bias(0.4));
        const MatchScore score = match_score(sketch, centroid(source), target);
        const Shift d = gravity_shift(centroid(target), centroid(source));
        const auto [w, b] = smtest::oracle_match_counts(sketch, d, target);
        CHECK(score.w == w);
        CHECK(score.b == b);
        CHECK(score.n_w == static_cast<std::int64_t>(sketch.white_points.size()));
        CHECK(score.n_b == static_cast<std::int64_t>(sketch.black_points.size()));
        CHECK(score.accuracy >= 0.0);
        CHECK(score.accuracy <= 100.0);
    }
}

TEST_CASE("match_score validates extents and foreground") {
    const BinaryImage img(8, 8, Pixel::Black);
    const Sketch sketch = extract_sketch(img, Bias(0.4));
    CHECK_THROWS_AS(match_score(sketch, centroid(img), BinaryImage(9, 8, Pixel::Black)),
                    DimensionError);
    CHECK_THROWS_AS(match_score(sketch, centroid(img), BinaryImage(8, 8)),
                    EmptyForegroundError);
    CHECK_THROWS_AS(match_score(sketch, centroid(img), BinaryImage(8, 8), ShiftPolicy::None),
                    EmptyForegroundError);
}

TEST_CASE("classify ranks the matching template first") {
    const TemplateSet set = bar_and_square_set();
    const TemplateEntry* bar = set.find("|");
    REQUIRE(bar != nullptr);

    const Ranking self = classify(bar->image, set);
    REQUIRE(self.size() == 2);
    CHECK(self.front().label == "|");
    CHECK(self.front().score.accuracy == 100.0);

    // One flipped pixel: the bar must still win, and both scores must agree
    // with the brute-force tally.
    BinaryImage query = bar->image;
    query.set(1, 1, Pixel::Black);
    const Ranking ranking = classify(query, set);
    REQUIRE(ranking.size() == 2);
    CHECK(ranking.front().label == "|");
    for (const RankedMatch& match : ranking) {
        const TemplateEntry* entry = set.find(match.label);
        const Shift d = gravity_shift(centroid(query), entry->centroid);
        const auto [w, b] = smtest::oracle_match_counts(entry->sketch, d, query);
        CHECK(match.score.w == w);
        CHECK(match.score.b == b);
        CHECK(match.score.accuracy == accuracy_percent(w, match.score.n_w, b, match.score.n_b));
    }
}

TEST_CASE("classify validates inputs") {
    const TemplateSet set = bar_and_square_set();
    TemplateSet empty = set;
    empty.entries.clear();
    const BinaryImage query = set.entries.front().image;
    CHECK_THROWS_AS(classify(query, empty), ConfigError);
    CHECK_THROWS_AS(classify(BinaryImage(8, 8, Pixel::Black), set), DimensionError);
    CHECK_THROWS_AS(classify(BinaryImage(16, 16), set), EmptyForegroundError);
}

TEST_CASE("classification is translation invariant, scores included") {
    const TemplateSet set = bar_and_square_set();
    const BinaryImage query = set.find("|")->image;
    const Ranking base = classify(query, set);
    for (const auto [dx, dy] : {std::pair{2, 0}, {0, 2}, {4, -2}, {-2, -1}}) {
        const BinaryImage moved = translate(query, dx, dy);
        REQUIRE(moved.count_black() == query.count_black()); // nothing clipped
        const Ranking shifted = classify(moved, set);
        REQUIRE(shifted.size() == base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(shifted[i].label == base[i].label);
            CHECK(shifted[i].score == base[i].score);
        }
    }
}

TEST_CASE("ranking breaks accuracy ties by ascending label") {
    IngestParams params;
    params.name = "twins";
    params.bias = Bias(0.4);
    params.canvas_width = 12;
    params.canvas_height = 12;
    params.margin = 2;
    BinaryImage blob(6, 6);
    for (int y = 1; y < 5; ++y) {
        for (int x = 1; x < 5; ++x) blob.set(x, y, Pixel::Black);
    }
    // Identical glyphs under two labels tie exactly; 'A' must come first.
    const TemplateSet set = build_set(params, {{"B", blob}, {"A", blob}});
    const Ranking ranking = classify(set.entries.front().image, set);
    REQUIRE(ranking.size() == 2);
    CHECK(ranking[0].score.accuracy == ranking[1].score.accuracy);
    CHECK(ranking[0].label == "A");
    CHECK(ranking[1].label == "B");
}
