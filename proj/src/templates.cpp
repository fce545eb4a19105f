#include "sketchmatch/templates.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "sketchmatch/errors.hpp"
#include "sketchmatch/fileio.hpp"

namespace sketchmatch {
namespace {

constexpr std::string_view kManifestName = "set.tsv";
constexpr std::string_view kVersionTag = "#SKETCHSET v1";

// One UTF-8 codepoint, excluding control characters that would break the
// tab-separated manifest.
bool is_single_character(std::string_view label) {
    if (label.empty()) return false;
    const auto lead = static_cast<unsigned char>(label[0]);
    if (lead < 0x20 || lead == 0x7F) return false;
    std::size_t len = 0;
    if (lead < 0x80) len = 1;
    else if ((lead >> 5) == 0x6) len = 2;
    else if ((lead >> 4) == 0xE) len = 3;
    else if ((lead >> 3) == 0x1E) len = 4;
    else return false;
    if (label.size() != len) return false;
    for (std::size_t i = 1; i < len; ++i) {
        if ((static_cast<unsigned char>(label[i]) >> 6) != 0x2) return false;
    }
    return true;
}

// Stable image filename for a label: ASCII alphanumerics keep their
// character, everything else becomes u<hex of the UTF-8 bytes>.
std::string label_filename(std::string_view label) {
    if (label.size() == 1) {
        const char c = label[0];
        if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
            return std::string(1, c) + ".pbm";
        }
    }
    std::string name = "u";
    for (char c : label) {
        char buf[4];
        std::snprintf(buf, sizeof(buf), "%02x", static_cast<unsigned char>(c));
        name += buf;
    }
    return name + ".pbm";
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double parse_double(std::string_view text, const char* what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw FormatError(std::string("bad ") + what + " in set manifest");
    }
    return v;
}

int parse_int(std::string_view text, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw FormatError(std::string("bad ") + what + " in set manifest");
    }
    return v;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = nl + 1;
    }
    return lines;
}

} // namespace

const TemplateEntry* TemplateSet::find(std::string_view label) const {
    for (const TemplateEntry& e : entries) {
        if (e.label == label) return &e;
    }
    return nullptr;
}

TemplateSet build_set(const IngestParams& params,
                      std::vector<std::pair<std::string, BinaryImage>> glyphs,
                      std::vector<std::string>* warnings) {
    TemplateSet set;
    set.name = params.name;
    set.canvas_width = params.canvas_width;
    set.canvas_height = params.canvas_height;
    set.bias = params.bias;
    set.margin = params.margin;

    std::sort(glyphs.begin(), glyphs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (auto& [label, image] : glyphs) {
        if (!is_single_character(label)) {
            throw ConfigError("label is not a single character: \"" + label + "\"");
        }
        if (set.find(label) != nullptr) {
            throw ConfigError("duplicate label: \"" + label + "\"");
        }
        BinaryImage normalized(1, 1);
        try {
            normalized = normalize(image, params.canvas_width, params.canvas_height, params.margin);
        } catch (const EmptyForegroundError&) {
            if (warnings) {
                warnings->push_back("skipping blank glyph for label \"" + label + "\"");
            }
            continue;
        }
        TemplateEntry entry{label, normalized, extract_sketch(normalized, params.bias),
                            centroid(normalized)};
        set.entries.push_back(std::move(entry));
    }
    return set;
}

TemplateSet ingest(const std::filesystem::path& manifest_path, const IngestParams& params,
                   std::vector<std::string>* warnings) {
    const std::string text = read_file(manifest_path);
    const std::filesystem::path base = manifest_path.parent_path();

    std::vector<std::pair<std::string, BinaryImage>> glyphs;
    for (std::string_view line : split_lines(text)) {
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
            throw FormatError("manifest rows must be label<TAB>path");
        }
        const PnmImage img = load_pnm(read_file(base / std::string(fields[1])));
        glyphs.emplace_back(std::string(fields[0]), to_binary(img, params.threshold));
    }
    return build_set(params, std::move(glyphs), warnings);
}

void save_set(const TemplateSet& set, const std::filesystem::path& dir) {
    if (set.name.find_first_of("\t\n\r") != std::string::npos) {
        throw ConfigError("set name must not contain tabs or line breaks");
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create set directory: " + dir.string());
    }

    std::string manifest;
    manifest += kVersionTag;
    manifest += '\t';
    manifest += set.name;
    manifest += '\t';
    manifest += std::to_string(set.canvas_width);
    manifest += '\t';
    manifest += std::to_string(set.canvas_height);
    manifest += '\t';
    manifest += format_double(set.bias.value);
    manifest += '\t';
    manifest += std::to_string(set.margin);
    manifest += '\n';

    for (const TemplateEntry& entry : set.entries) {
        const std::string filename = label_filename(entry.label);
        write_file_atomic(dir / filename, save_pnm(entry.image));
        manifest += entry.label;
        manifest += '\t';
        manifest += filename;
        manifest += '\n';
    }
    // Manifest last: its presence implies the glyph files are in place.
    write_file_atomic(dir / std::string(kManifestName), manifest);
}

TemplateSet load_set(const std::filesystem::path& dir) {
    const std::string text = read_file(dir / std::string(kManifestName));
    const auto lines = split_lines(text);
    if (lines.empty()) throw FormatError("empty set manifest");

    const auto header = split_tabs(lines[0]);
    if (header.size() != 6 || !header[0].starts_with("#SKETCHSET v")) {
        throw FormatError("malformed set manifest header");
    }
    if (header[0] != kVersionTag) {
        throw FormatError("unsupported version: " + std::string(header[0]));
    }

    IngestParams params;
    params.name = std::string(header[1]);
    params.canvas_width = parse_int(header[2], "canvas width");
    params.canvas_height = parse_int(header[3], "canvas height");
    params.bias = Bias(parse_double(header[4], "bias"));
    params.margin = parse_int(header[5], "margin");

    TemplateSet set;
    set.name = params.name;
    set.canvas_width = params.canvas_width;
    set.canvas_height = params.canvas_height;
    set.bias = params.bias;
    set.margin = params.margin;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() || lines[i].front() == '#') continue;
        const auto fields = split_tabs(lines[i]);
        if (fields.size() != 2) throw FormatError("manifest rows must be label<TAB>filename");
        std::string label(fields[0]);
        if (!is_single_character(label)) {
            throw ConfigError("label is not a single character: \"" + label + "\"");
        }
        if (set.find(label) != nullptr) {
            throw ConfigError("duplicate label: \"" + label + "\"");
        }
        const PnmImage img = load_pnm(read_file(dir / std::string(fields[1])));
        const auto* bin = std::get_if<BinaryImage>(&img);
        if (bin == nullptr) {
            throw FormatError("set entry \"" + label + "\" is not a PBM image");
        }
        if (bin->width() != set.canvas_width || bin->height() != set.canvas_height) {
            throw DimensionError("set entry \"" + label + "\" does not match the canvas");
        }
        set.entries.push_back(
            TemplateEntry{std::move(label), *bin, extract_sketch(*bin, set.bias), centroid(*bin)});
    }
    return set;
}

} // namespace sketchmatch
