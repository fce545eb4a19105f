#include "sketchmatch/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sketchmatch/errors.hpp"
#include "sketchmatch/fileio.hpp"
#include "sketchmatch/sketch.hpp"

namespace sketchmatch {
namespace {

constexpr std::string_view kCorpusManifest = "corpus.tsv";
constexpr std::string_view kCorpusVersionTag = "#CORPUS v1";

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

BinaryImage apply_scale(const BinaryImage& img, double factor) {
    if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be positive");
    if (img.count_black() == 0) return img;
    const Centroid c = centroid(img);
    const double cx = c.cx();
    const double cy = c.cy();
    BinaryImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            // Inverse mapping: the source pixel that lands here.
            const int sx = static_cast<int>(std::llround(cx + (x - cx) / factor));
            const int sy = static_cast<int>(std::llround(cy + (y - cy) / factor));
            if (img.in_frame(sx, sy) && img.black(sx, sy)) {
                out.set(x, y, Pixel::Black);
            }
        }
    }
    return out;
}

BinaryImage apply_morph(const BinaryImage& img, bool dilate) {
    static constexpr int kCross[5][2] = {{0, 0}, {-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    BinaryImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            bool hit = dilate ? false : true;
            for (const auto& off : kCross) {
                const int nx = x + off[0];
                const int ny = y + off[1];
                const bool black = img.in_frame(nx, ny) && img.black(nx, ny);
                if (dilate) {
                    hit = hit || black;
                } else {
                    hit = hit && black;
                }
            }
            if (hit) out.set(x, y, Pixel::Black);
        }
    }
    return out;
}

BinaryImage apply_noise(const BinaryImage& img, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("noise probability must be in [0, 1]");
    SplitMix64 rng(seed);
    BinaryImage out = img;
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            if (rng.next_unit() < p) {
                out.set(x, y, img.black(x, y) ? Pixel::White : Pixel::Black);
            }
        }
    }
    return out;
}

BinaryImage apply_elongate(const BinaryImage& img, int e) {
    if (e < 0) throw std::invalid_argument("elongation length must be >= 0");
    BinaryImage out = img;
    int top = -1, bottom = -1;
    for (int y = 0; y < img.height(); ++y) {
        const Pixel* row = img.row(y);
        for (int x = 0; x < img.width(); ++x) {
            if (row[x] == Pixel::Black) {
                if (top < 0) top = y;
                bottom = y;
                break;
            }
        }
    }
    if (top < 0 || e == 0) return out;
    for (int y : {top, bottom}) {
        std::span<const Pixel> row(img.row(y), static_cast<std::size_t>(img.width()));
        const auto runs = find_runs(row, Pixel::Black, Orientation::Horizontal, y);
        if (runs.empty()) continue;
        const Run& leftmost = runs.front();
        const Run& rightmost = runs.back();
        for (int x = std::max(0, leftmost.start - e); x < leftmost.start; ++x) {
            out.set(x, y, Pixel::Black);
        }
        for (int x = rightmost.end + 1; x <= std::min(img.width() - 1, rightmost.end + e); ++x) {
            out.set(x, y, Pixel::Black);
        }
        if (top == bottom) break;
    }
    return out;
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

// --- recipe parsing -------------------------------------------------------

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_on(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t at = text.find(sep, start);
        if (at == std::string_view::npos) at = text.size();
        parts.push_back(text.substr(start, at - start));
        start = at + 1;
        if (at == text.size()) break;
    }
    return parts;
}

std::vector<double> parse_args(std::string_view inner, std::size_t expected, std::string_view name) {
    std::vector<double> args;
    for (std::string_view part : split_on(inner, ',')) {
        part = trim(part);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size()) {
            throw std::invalid_argument("bad argument for " + std::string(name) + ": \"" +
                                        std::string(part) + "\"");
        }
        args.push_back(v);
    }
    if (args.size() != expected) {
        throw std::invalid_argument(std::string(name) + " expects " + std::to_string(expected) +
                                    " argument(s)");
    }
    return args;
}

Distortion parse_distortion(std::string_view text) {
    text = trim(text);
    std::string_view name = text;
    std::string_view inner;
    const std::size_t open = text.find('(');
    if (open != std::string_view::npos) {
        if (text.back() != ')') throw std::invalid_argument("unbalanced parentheses in recipe");
        name = trim(text.substr(0, open));
        inner = text.substr(open + 1, text.size() - open - 2);
    }
    if (name == "translate") {
        const auto a = parse_args(inner, 2, name);
        return Translate{static_cast<int>(std::llround(a[0])), static_cast<int>(std::llround(a[1]))};
    }
    if (name == "scale") {
        const auto a = parse_args(inner, 1, name);
        if (!(a[0] > 0.0)) throw std::invalid_argument("scale factor must be positive");
        return Scale{a[0]};
    }
    if (name == "thicken") {
        if (open != std::string_view::npos) parse_args(inner, 0, name);
        return Thicken{};
    }
    if (name == "thin") {
        if (open != std::string_view::npos) parse_args(inner, 0, name);
        return Thin{};
    }
    if (name == "noise") {
        const auto a = parse_args(inner, 1, name);
        if (a[0] < 0.0 || a[0] > 1.0) {
            throw std::invalid_argument("noise probability must be in [0, 1]");
        }
        return Noise{a[0]};
    }
    if (name == "elongate") {
        const auto a = parse_args(inner, 1, name);
        if (a[0] < 0.0) throw std::invalid_argument("elongation length must be >= 0");
        return Elongate{static_cast<int>(std::llround(a[0]))};
    }
    throw std::invalid_argument("unknown distortion: \"" + std::string(name) + "\"");
}

} // namespace

std::string describe(const Distortion& d) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Translate>) {
                return "translate(" + std::to_string(v.dx) + "," + std::to_string(v.dy) + ")";
            } else if constexpr (std::is_same_v<T, Scale>) {
                return "scale(" + format_double(v.factor) + ")";
            } else if constexpr (std::is_same_v<T, Thicken>) {
                return "thicken";
            } else if constexpr (std::is_same_v<T, Thin>) {
                return "thin";
            } else if constexpr (std::is_same_v<T, Noise>) {
                return "noise(" + format_double(v.p) + ")";
            } else {
                return "elongate(" + std::to_string(v.e) + ")";
            }
        },
        d);
}

BinaryImage distort(const BinaryImage& img, const Distortion& d, std::uint64_t seed) {
    return std::visit(
        [&](const auto& v) -> BinaryImage {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Translate>) {
                return translate(img, v.dx, v.dy);
            } else if constexpr (std::is_same_v<T, Scale>) {
                return apply_scale(img, v.factor);
            } else if constexpr (std::is_same_v<T, Thicken>) {
                return apply_morph(img, true);
            } else if constexpr (std::is_same_v<T, Thin>) {
                return apply_morph(img, false);
            } else if constexpr (std::is_same_v<T, Noise>) {
                return apply_noise(img, v.p, seed);
            } else {
                return apply_elongate(img, v.e);
            }
        },
        d);
}

Recipe parse_recipe(std::string_view text) {
    Recipe recipe;
    for (std::string_view group : split_on(text, ';')) {
        group = trim(group);
        if (group.empty()) continue;
        RecipeLine line;
        // Optional trailing xCOUNT.
        const std::size_t x_at = group.rfind('x');
        if (x_at != std::string_view::npos && x_at + 1 < group.size() && group.find(')', x_at) == std::string_view::npos) {
            std::string_view count_text = trim(group.substr(x_at + 1));
            int count = 0;
            auto [ptr, ec] =
                std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
            if (ec == std::errc{} && ptr == count_text.data() + count_text.size()) {
                if (count <= 0) throw std::invalid_argument("recipe count must be positive");
                line.count = count;
                group = trim(group.substr(0, x_at));
            }
        }
        for (std::string_view part : split_on(group, '+')) {
            line.distortions.push_back(parse_distortion(part));
        }
        recipe.push_back(std::move(line));
    }
    if (recipe.empty()) throw std::invalid_argument("empty recipe");
    return recipe;
}

std::vector<CorpusItem> generate_corpus(const TemplateSet& base, const Recipe& recipe,
                                        std::uint64_t master_seed) {
    if (base.entries.empty()) throw ConfigError("corpus source set is empty");
    if (recipe.empty()) throw ConfigError("empty recipe");
    std::vector<CorpusItem> corpus;
    std::uint64_t index = 0;
    for (const RecipeLine& line : recipe) {
        std::string desc;
        for (std::size_t i = 0; i < line.distortions.size(); ++i) {
            if (i > 0) desc += '+';
            desc += describe(line.distortions[i]);
        }
        for (const TemplateEntry& entry : base.entries) {
            for (int rep = 0; rep < line.count; ++rep, ++index) {
                const std::uint64_t item_seed = master_seed ^ index;
                SplitMix64 sub_seeds(item_seed);
                BinaryImage image = entry.image;
                for (const Distortion& d : line.distortions) {
                    image = distort(image, d, sub_seeds.next());
                }
                corpus.push_back(CorpusItem{entry.label, std::move(image),
                                            Provenance{base.name, desc, item_seed}});
            }
        }
    }
    return corpus;
}

void save_corpus(const std::vector<CorpusItem>& corpus, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create corpus directory: " + dir.string());
    }
    std::string manifest{kCorpusVersionTag};
    manifest += '\n';
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "item%05zu.pbm", i);
        write_file_atomic(dir / name, save_pnm(corpus[i].image));
        manifest += std::to_string(i);
        manifest += '\t';
        manifest += corpus[i].true_label;
        manifest += '\t';
        manifest += name;
        manifest += '\t';
        manifest += corpus[i].provenance.source_set;
        manifest += '\t';
        manifest += corpus[i].provenance.distortions;
        manifest += '\t';
        manifest += std::to_string(corpus[i].provenance.seed);
        manifest += '\n';
    }
    write_file_atomic(dir / std::string(kCorpusManifest), manifest);
}

std::vector<CorpusItem> load_corpus(const std::filesystem::path& dir) {
    const std::string text = read_file(dir / std::string(kCorpusManifest));
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0] != kCorpusVersionTag) {
        throw FormatError("unsupported corpus manifest");
    }
    std::vector<CorpusItem> corpus;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() || lines[i].front() == '#') continue;
        const auto fields = split_tabs(lines[i]);
        if (fields.size() != 6) throw FormatError("corpus rows must have 6 fields");
        const PnmImage img = load_pnm(read_file(dir / std::string(fields[2])));
        const auto* bin = std::get_if<BinaryImage>(&img);
        if (bin == nullptr) throw FormatError("corpus item is not a PBM image");
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(fields[5].data(), fields[5].data() + fields[5].size(), seed);
        if (ec != std::errc{} || ptr != fields[5].data() + fields[5].size()) {
            throw FormatError("bad seed in corpus manifest");
        }
        corpus.push_back(CorpusItem{std::string(fields[1]), *bin,
                                    Provenance{std::string(fields[3]), std::string(fields[4]), seed}});
    }
    return corpus;
}

double percent_1dp(std::int64_t correct, std::int64_t samples) {
    if (samples == 0) return 0.0;
    return std::round(1000.0 * static_cast<double>(correct) / static_cast<double>(samples)) / 10.0;
}

Report evaluate(const std::vector<CorpusItem>& corpus, const std::vector<TemplateSet>& recognizers,
                ShiftPolicy policy) {
    if (corpus.empty()) throw ConfigError("empty corpus");
    if (recognizers.empty()) throw ConfigError("no recognizer sets");
    const int cw = recognizers.front().canvas_width;
    const int ch = recognizers.front().canvas_height;
    for (const TemplateSet& set : recognizers) {
        if (set.canvas_width != cw || set.canvas_height != ch) {
            throw DimensionError("recognizer sets do not share a canvas");
        }
    }
    for (const CorpusItem& item : corpus) {
        if (item.image.width() != cw || item.image.height() != ch) {
            throw DimensionError("corpus item is not on the recognizer canvas");
        }
    }

    Report report;
    for (const TemplateSet& set : recognizers) {
        ReportRow row;
        row.recognizer = set.name;
        row.samples = static_cast<std::int64_t>(corpus.size());
        for (const CorpusItem& item : corpus) {
            const Ranking ranking = classify(item.image, set, policy);
            const std::string& predicted = ranking.front().label;
            if (predicted == item.true_label) ++row.correct;
            ++report.confusion[{item.true_label, predicted}];
        }
        row.percent = percent_1dp(row.correct, row.samples);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string report_csv(const Report& report) {
    std::string csv = "recognizer,samples,correct,percent\n";
    for (const ReportRow& row : report.rows) {
        char percent[32];
        std::snprintf(percent, sizeof(percent), "%.1f", row.percent);
        csv += row.recognizer;
        csv += ',';
        csv += std::to_string(row.samples);
        csv += ',';
        csv += std::to_string(row.correct);
        csv += ',';
        csv += percent;
        csv += '\n';
    }
    return csv;
}

std::string confusion_csv(const Report& report) {
    std::string csv = "true,predicted,count\n";
    for (const auto& [key, count] : report.confusion) {
        csv += key.first;
        csv += ',';
        csv += key.second;
        csv += ',';
        csv += std::to_string(count);
        csv += '\n';
    }
    return csv;
}

void write_report(const Report& report, const std::filesystem::path& path) {
    write_file_atomic(path, report_csv(report));
    std::filesystem::path confusion_path = path;
    confusion_path.replace_extension();
    confusion_path += ".confusion.csv";
    write_file_atomic(confusion_path, confusion_csv(report));
}

} // namespace sketchmatch
