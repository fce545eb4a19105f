#ifndef SKETCHMATCH_TEMPLATES_HPP
#define SKETCHMATCH_TEMPLATES_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sketchmatch/raster.hpp"
#include "sketchmatch/sketch.hpp"

namespace sketchmatch {

/// One recognizer-font character: a normalized glyph with its precomputed
/// sketch and centroid. The label is a single Unicode character (UTF-8).
struct TemplateEntry {
    std::string label;
    BinaryImage image;
    Sketch sketch;
    Centroid centroid;
};

/// A labeled recognizer font. All entries share the canvas and bias;
/// labels are unique and sorted ascending by codepoint.
struct TemplateSet {
    std::string name;
    int canvas_width = 64;
    int canvas_height = 64;
    Bias bias;
    int margin = 4;
    std::vector<TemplateEntry> entries;

    const TemplateEntry* find(std::string_view label) const;
};

struct IngestParams {
    std::string name;
    Bias bias;
    int canvas_width = 64;
    int canvas_height = 64;
    int margin = 4;
    int threshold = 128; // binarization threshold for grayscale inputs
};

/// Builds a TemplateSet from labeled in-memory glyphs: each image is
/// normalized to the canvas, then its sketch (all four directions) and
/// centroid are computed. Blank glyphs are skipped with a warning pushed
/// to `warnings`. Entries come out sorted by label. Throws ConfigError on
/// duplicate or multi-character labels.
TemplateSet build_set(const IngestParams& params,
                      std::vector<std::pair<std::string, BinaryImage>> glyphs,
                      std::vector<std::string>* warnings = nullptr);

/// Reads a TSV manifest of `label<TAB>image-path` rows (paths relative to
/// the manifest, `#` comments allowed) and ingests the referenced glyph
/// files via build_set. Throws IoError for missing files.
TemplateSet ingest(const std::filesystem::path& manifest_path, const IngestParams& params,
                   std::vector<std::string>* warnings = nullptr);

/// Persists the set as `set.tsv` plus one canonical P1 file per entry.
/// Sketches and centroids are not written; load_set recomputes them.
void save_set(const TemplateSet& set, const std::filesystem::path& dir);

/// Reloads a directory written by save_set, recomputing sketches and
/// centroids from the stored bias and images. Throws FormatError on an
/// unsupported version header, DimensionError when a stored image does
/// not match the canvas.
TemplateSet load_set(const std::filesystem::path& dir);

} // namespace sketchmatch

#endif
