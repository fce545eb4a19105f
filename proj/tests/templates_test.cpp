#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "sketchmatch/errors.hpp"
#include "sketchmatch/fileio.hpp"
#include "sketchmatch/matcher.hpp"
#include "sketchmatch/templates.hpp"
#include "support.hpp"

using namespace sketchmatch;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;

    explicit TempDir(const std::string& name)
        : path(fs::temp_directory_path() / ("sketchmatch_" + name)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

IngestParams small_params(const std::string& name) {
    IngestParams params;
    params.name = name;
    params.bias = Bias(0.4);
    params.canvas_width = 24;
    params.canvas_height = 24;
    params.margin = 3;
    return params;
}

BinaryImage glyph_l() {
    BinaryImage img(8, 10);
    for (int y = 0; y < 10; ++y) img.set(1, y, Pixel::Black);
    for (int x = 1; x < 7; ++x) img.set(x, 9, Pixel::Black);
    return img;
}

BinaryImage glyph_t() {
    BinaryImage img(8, 10);
    for (int x = 0; x < 8; ++x) img.set(x, 0, Pixel::Black);
    for (int y = 0; y < 10; ++y) img.set(4, y, Pixel::Black);
    return img;
}

void expect_equal_sets(const TemplateSet& a, const TemplateSet& b) {
    CHECK(a.name == b.name);
    CHECK(a.canvas_width == b.canvas_width);
    CHECK(a.canvas_height == b.canvas_height);
    CHECK(a.bias.value == b.bias.value);
    CHECK(a.margin == b.margin);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].label == b.entries[i].label);
        CHECK(a.entries[i].image == b.entries[i].image);
        CHECK(a.entries[i].sketch == b.entries[i].sketch);
        CHECK(a.entries[i].centroid == b.entries[i].centroid);
    }
}

} // namespace

TEST_CASE("build_set normalizes, sketches and sorts entries") {
    const TemplateSet set =
        build_set(small_params("mini"), {{"T", glyph_t()}, {"L", glyph_l()}});
    REQUIRE(set.entries.size() == 2);
    CHECK(set.entries[0].label == "L");
    CHECK(set.entries[1].label == "T");
    for (const TemplateEntry& entry : set.entries) {
        CHECK(entry.image.width() == 24);
        CHECK(entry.image.height() == 24);
        CHECK_FALSE(entry.sketch.black_points.empty());
        // Every entry self-matches at exactly 100.
        const MatchScore score = match_score(entry.sketch, entry.centroid, entry.image);
        CHECK(score.accuracy == 100.0);
    }
}

TEST_CASE("build_set rejects bad labels and skips blank glyphs") {
    CHECK_THROWS_WITH_AS(
        build_set(small_params("dup"), {{"A", glyph_l()}, {"A", glyph_t()}}),
        doctest::Contains("duplicate label: \"A\""), ConfigError);
    CHECK_THROWS_AS(build_set(small_params("multi"), {{"AB", glyph_l()}}), ConfigError);
    CHECK_THROWS_AS(build_set(small_params("empty"), {{"", glyph_l()}}), ConfigError);
    CHECK_THROWS_AS(build_set(small_params("ctrl"), {{"\t", glyph_l()}}), ConfigError);

    // Multi-byte UTF-8 labels are fine as long as they are one codepoint.
    const TemplateSet greek = build_set(small_params("greek"), {{"Ω", glyph_l()}});
    CHECK(greek.entries.size() == 1);

    std::vector<std::string> warnings;
    const TemplateSet set = build_set(
        small_params("blanks"), {{"L", glyph_l()}, {"X", BinaryImage(8, 8)}}, &warnings);
    CHECK(set.entries.size() == 1);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("X") != std::string::npos);
}

TEST_CASE("ingest reads a TSV manifest of glyph files") {
    TempDir dir("ingest");
    write_file_atomic(dir.path / "l.pbm", save_pnm(glyph_l()));
    write_file_atomic(dir.path / "t.pbm", save_pnm(glyph_t()));
    write_file_atomic(dir.path / "manifest.tsv", "# comment line\nL\tl.pbm\nT\tt.pbm\n");

    const TemplateSet set = ingest(dir.path / "manifest.tsv", small_params("mini"));
    REQUIRE(set.entries.size() == 2);
    CHECK(set.entries[0].label == "L");

    // Ingesting the same files twice is deterministic byte-for-byte.
    save_set(set, dir.path / "out1");
    save_set(ingest(dir.path / "manifest.tsv", small_params("mini")), dir.path / "out2");
    CHECK(read_file(dir.path / "out1/set.tsv") == read_file(dir.path / "out2/set.tsv"));
    CHECK(read_file(dir.path / "out1/L.pbm") == read_file(dir.path / "out2/L.pbm"));

    CHECK_THROWS_AS(ingest(dir.path / "missing.tsv", small_params("x")), IoError);
    write_file_atomic(dir.path / "bad.tsv", "L\tnot_there.pbm\n");
    CHECK_THROWS_AS(ingest(dir.path / "bad.tsv", small_params("x")), IoError);
    write_file_atomic(dir.path / "cols.tsv", "L\n");
    CHECK_THROWS_AS(ingest(dir.path / "cols.tsv", small_params("x")), FormatError);
}

TEST_CASE("save_set and load_set round trip exactly") {
    TempDir dir("roundtrip");
    const TemplateSet set =
        build_set(small_params("round"), {{"L", glyph_l()}, {"T", glyph_t()}});
    save_set(set, dir.path / "set");
    expect_equal_sets(load_set(dir.path / "set"), set);

    // Empty name survives the header.
    TemplateSet anonymous = set;
    anonymous.name.clear();
    save_set(anonymous, dir.path / "anon");
    CHECK(load_set(dir.path / "anon").name.empty());

    // Non-ASCII labels round-trip through hex-named image files.
    const TemplateSet greek =
        build_set(small_params("greek"), {{"Ω", glyph_l()}, {"A", glyph_t()}});
    save_set(greek, dir.path / "greek");
    expect_equal_sets(load_set(dir.path / "greek"), greek);

    TemplateSet tabbed = set;
    tabbed.name = "bad\tname";
    CHECK_THROWS_AS(save_set(tabbed, dir.path / "tabbed"), ConfigError);
}

TEST_CASE("load_set rejects unknown versions and tampered entries") {
    TempDir dir("tamper");
    const TemplateSet set = build_set(small_params("sabotage"), {{"L", glyph_l()}});
    save_set(set, dir.path / "set");

    std::string manifest = read_file(dir.path / "set/set.tsv");
    write_file_atomic(dir.path / "set/set.tsv",
                      "#SKETCHSET v2" + manifest.substr(manifest.find('\t')));
    CHECK_THROWS_WITH_AS(load_set(dir.path / "set"), doctest::Contains("unsupported version"),
                         FormatError);

    write_file_atomic(dir.path / "set/set.tsv", manifest);
    write_file_atomic(dir.path / "set/L.pbm", save_pnm(BinaryImage(8, 8, Pixel::Black)));
    CHECK_THROWS_WITH_AS(load_set(dir.path / "set"), doctest::Contains("\"L\""), DimensionError);

    fs::remove(dir.path / "set/L.pbm");
    CHECK_THROWS_AS(load_set(dir.path / "set"), IoError);
}

TEST_CASE("save_set fails cleanly on an unwritable destination") {
    TempDir dir("unwritable");
    write_file_atomic(dir.path / "blocker", "not a directory\n");
    const TemplateSet set = build_set(small_params("denied"), {{"L", glyph_l()}});
    CHECK_THROWS_AS(save_set(set, dir.path / "blocker" / "set"), IoError);
}
