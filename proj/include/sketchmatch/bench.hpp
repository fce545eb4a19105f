#ifndef SKETCHMATCH_BENCH_HPP
#define SKETCHMATCH_BENCH_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sketchmatch/matcher.hpp"
#include "sketchmatch/raster.hpp"
#include "sketchmatch/templates.hpp"

namespace sketchmatch {

/// splitmix64 stream; the portable PRNG contract for corpus generation.
/// Identical seeds produce identical streams on every platform.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct Translate {
    int dx = 0;
    int dy = 0;
};
struct Scale {
    double factor = 1.0;
};
struct Thicken {};
struct Thin {};
struct Noise {
    double p = 0.0; // independent flip probability per pixel
};
struct Elongate {
    int e = 0; // serif extension length in pixels
};

using Distortion = std::variant<Translate, Scale, Thicken, Thin, Noise, Elongate>;

/// Compact text form, e.g. "noise(0.02)" or "translate(2,1)".
std::string describe(const Distortion& d);

/// Applies one distortion:
///  - Translate/Scale use the raster primitives (Scale resamples about the
///    black-pixel centroid, nearest-neighbor, clamped to the frame);
///  - Thicken/Thin are one pass of dilation/erosion with a 3x3 cross;
///  - Noise flips each pixel independently with probability p, drawing
///    one splitmix64 variate per pixel in row-major order from `seed`;
///  - Elongate extends, on the topmost and bottommost rows containing
///    black, the leftmost run left by e and the rightmost run right by e,
///    clamped to the frame.
BinaryImage distort(const BinaryImage& img, const Distortion& d, std::uint64_t seed);

struct RecipeLine {
    std::vector<Distortion> distortions; // applied in order
    int count = 1;                       // items per source glyph
};
using Recipe = std::vector<RecipeLine>;

/// Parses "noise(0.02)+translate(2,1)x5; elongate(3)" style recipes:
/// semicolon-separated lines, '+'-chained distortions, optional xCOUNT.
/// Throws std::invalid_argument on errors.
Recipe parse_recipe(std::string_view text);

struct Provenance {
    std::string source_set;
    std::string distortions;
    std::uint64_t seed = 0;
};

/// One sample-set member: a distorted glyph with its ground-truth label.
struct CorpusItem {
    std::string true_label;
    BinaryImage image;
    Provenance provenance;
};

/// Deterministic corpus: iteration order is (recipe line, entry label,
/// repetition), item i gets seed master_seed ^ i, and each distortion in
/// the item's pipeline draws its own sub-seed from a splitmix64 stream on
/// that per-item seed. Same inputs give byte-identical corpora.
std::vector<CorpusItem> generate_corpus(const TemplateSet& base, const Recipe& recipe,
                                        std::uint64_t master_seed);

/// Writes corpus items as canonical P1 files plus a `corpus.tsv` manifest
/// recording labels and provenance.
void save_corpus(const std::vector<CorpusItem>& corpus, const std::filesystem::path& dir);

/// Reads a directory written by save_corpus.
std::vector<CorpusItem> load_corpus(const std::filesystem::path& dir);

struct ReportRow {
    std::string recognizer;
    std::int64_t samples = 0;
    std::int64_t correct = 0;
    double percent = 0.0;
};

/// Table-style evaluation results: one row per recognizer set, plus
/// (true label, predicted label) confusion counts summed over recognizers.
struct Report {
    std::vector<ReportRow> rows;
    std::map<std::pair<std::string, std::string>, std::int64_t> confusion;
};

/// 100 * correct / samples rounded half away from zero to one decimal.
double percent_1dp(std::int64_t correct, std::int64_t samples);

/// Classifies every corpus item with every recognizer; an item is correct
/// when the top-ranked label equals its true label. Throws DimensionError
/// when corpus and recognizers do not share a canvas.
Report evaluate(const std::vector<CorpusItem>& corpus, const std::vector<TemplateSet>& recognizers,
                ShiftPolicy policy = ShiftPolicy::Gravity);

/// CSV bodies for the report and its confusion counts. LF endings, UTF-8,
/// percent printed with one decimal.
std::string report_csv(const Report& report);
std::string confusion_csv(const Report& report);

/// Writes report_csv to `path` and confusion_csv to the sibling
/// `<stem>.confusion.csv`.
void write_report(const Report& report, const std::filesystem::path& path);

} // namespace sketchmatch

#endif
