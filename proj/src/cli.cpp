#include "sketchmatch/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>

#include "sketchmatch/bench.hpp"
#include "sketchmatch/errors.hpp"
#include "sketchmatch/fileio.hpp"
#include "sketchmatch/matcher.hpp"
#include "sketchmatch/raster.hpp"
#include "sketchmatch/sketch.hpp"
#include "sketchmatch/templates.hpp"

namespace sketchmatch::cli {
namespace {

namespace fs = std::filesystem;

struct CommonOpts {
    double bias = Bias::kDefault;
    std::string canvas = "64x64";
    int margin = 4;
    int threshold = 128;
    std::string directions = "hb,hw,vb,vw";
    std::uint64_t seed = 42;
};

struct Canvas {
    int width = 0;
    int height = 0;
};

Canvas parse_canvas(const std::string& text) {
    Canvas c;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%dx%d%c", &c.width, &c.height, &extra) != 2 || c.width <= 0 ||
        c.height <= 0) {
        throw CLI::ValidationError("--canvas", "expected WxH with positive dimensions");
    }
    return c;
}

Directions parse_directions(const std::string& text) {
    Directions dirs;
    std::string_view rest = text;
    while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        std::string_view token = rest.substr(0, comma);
        if (token == "hb") dirs.horizontal_black = true;
        else if (token == "hw") dirs.horizontal_white = true;
        else if (token == "vb") dirs.vertical_black = true;
        else if (token == "vw") dirs.vertical_white = true;
        else throw CLI::ValidationError("--directions", "tokens must be hb, hw, vb or vw");
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (!dirs.any()) throw CLI::ValidationError("--directions", "at least one pass required");
    return dirs;
}

void validate_common(const CommonOpts& opts) {
    if (!(opts.bias > 0.0) || opts.bias > 1.0) {
        throw CLI::ValidationError("--bias", "bias must satisfy 0 < bias <= 1");
    }
    if (opts.threshold < 0 || opts.threshold > 255) {
        throw CLI::ValidationError("--threshold", "threshold must be in 0..255");
    }
    if (opts.margin < 0) {
        throw CLI::ValidationError("--margin", "margin must be >= 0");
    }
    const Canvas c = parse_canvas(opts.canvas);
    if (c.width <= 2 * opts.margin || c.height <= 2 * opts.margin) {
        throw CLI::ValidationError("--canvas", "canvas must exceed twice the margin");
    }
    parse_directions(opts.directions);
}

BinaryImage load_binary(const fs::path& path, int threshold) {
    return to_binary(load_pnm(read_file(path)), threshold);
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_seed = false) {
    cmd->add_option("--bias", opts.bias, "sketch bias in (0, 1]")->capture_default_str();
    cmd->add_option("--canvas", opts.canvas, "normalization canvas WxH")->capture_default_str();
    cmd->add_option("--margin", opts.margin, "normalization margin in pixels")
        ->capture_default_str();
    cmd->add_option("--threshold", opts.threshold, "binarization threshold for grayscale input")
        ->capture_default_str();
    cmd->add_option("--directions", opts.directions, "sketch passes (comma list of hb,hw,vb,vw)")
        ->capture_default_str();
    if (with_seed) {
        cmd->add_option("--seed", opts.seed, "master seed for corpus generation")
            ->capture_default_str();
    }
}

std::string format_accuracy(double accuracy) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", accuracy);
    return buf;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"single-character recognition via run-midpoint sketches"};
    app.name("sketchmatch");
    app.require_subcommand(1);

    CommonOpts opts;

    auto* sketch_cmd = app.add_subcommand("sketch", "extract a sketch and render it as PGM");
    std::string sketch_in, sketch_out;
    sketch_cmd->add_option("--in", sketch_in, "input PBM/PGM image")->required();
    sketch_cmd->add_option("--out", sketch_out, "output PGM rendering")->required();
    add_common(sketch_cmd, opts);

    auto* centroid_cmd = app.add_subcommand("centroid", "print the black-pixel center of gravity");
    std::string centroid_in;
    centroid_cmd->add_option("--in", centroid_in, "input PBM/PGM image")->required();
    add_common(centroid_cmd, opts);

    auto* match_cmd =
        app.add_subcommand("match", "score one template sketch against one query image");
    std::string match_template, match_query;
    bool match_no_shift = false;
    match_cmd->add_option("--template", match_template, "image the sketch is extracted from")
        ->required();
    match_cmd->add_option("--query", match_query, "image the sketch is sampled against")->required();
    match_cmd->add_flag("--no-shift", match_no_shift, "disable gravity shifting (d = 0)");
    add_common(match_cmd, opts);

    auto* classify_cmd = app.add_subcommand("classify", "rank template labels for a query image");
    std::string classify_templates, classify_in;
    bool classify_no_shift = false;
    bool classify_raw = false;
    classify_cmd->add_option("--templates", classify_templates, "template set directory")
        ->required();
    classify_cmd->add_option("--in", classify_in, "query PBM/PGM image")->required();
    classify_cmd->add_flag("--no-shift", classify_no_shift, "disable gravity shifting (d = 0)");
    classify_cmd->add_flag("--raw", classify_raw,
                           "skip query normalization (query must already be on the canvas)");
    add_common(classify_cmd, opts);

    auto* ingest_cmd =
        app.add_subcommand("ingest", "build a template set from a label<TAB>path manifest");
    std::string ingest_manifest, ingest_out, ingest_name;
    ingest_cmd->add_option("--manifest", ingest_manifest, "TSV manifest of labeled glyph images")
        ->required();
    ingest_cmd->add_option("--out", ingest_out, "output set directory")->required();
    ingest_cmd->add_option("--name", ingest_name, "set name (default: manifest stem)");
    add_common(ingest_cmd, opts);

    auto* gen_cmd = app.add_subcommand("gen-corpus", "generate a distorted sample corpus");
    std::string gen_templates, gen_out, gen_recipe;
    gen_cmd->add_option("--templates", gen_templates, "source template set directory")->required();
    gen_cmd->add_option("--out", gen_out, "output corpus directory")->required();
    gen_cmd->add_option("--recipe", gen_recipe,
                        "distortion recipe, e.g. \"noise(0.02)+translate(2,1)x5\"")
        ->required();
    add_common(gen_cmd, opts, /*with_seed=*/true);

    auto* bench_cmd = app.add_subcommand("bench", "evaluate recognizer sets against a corpus");
    std::string bench_corpus, bench_report;
    std::vector<std::string> bench_templates;
    bool bench_no_shift = false;
    bench_cmd->add_option("--corpus", bench_corpus, "corpus directory")->required();
    bench_cmd->add_option("--templates", bench_templates, "recognizer set directory (repeatable)")
        ->required();
    bench_cmd->add_option("--report", bench_report, "output CSV path")->required();
    bench_cmd->add_flag("--no-shift", bench_no_shift, "disable gravity shifting (d = 0)");

    auto* render_cmd =
        app.add_subcommand("render", "render a stored template's sketch as PGM");
    std::string render_templates, render_label, render_out;
    render_cmd->add_option("--templates", render_templates, "template set directory")->required();
    render_cmd->add_option("--label", render_label, "entry label to render")->required();
    render_cmd->add_option("--out", render_out, "output PGM rendering")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
        validate_common(opts);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return 1;
    }

    const Bias bias(opts.bias);
    const Canvas canvas = parse_canvas(opts.canvas);
    const Directions directions = parse_directions(opts.directions);

    try {
        if (*sketch_cmd) {
            const BinaryImage img = load_binary(sketch_in, opts.threshold);
            const Sketch sketch = extract_sketch(img, bias, directions);
            write_file_atomic(sketch_out, save_pgm(render_sketch(sketch)));
        } else if (*centroid_cmd) {
            const Centroid c = centroid(load_binary(centroid_in, opts.threshold));
            char line[80];
            std::snprintf(line, sizeof(line), "cx=%.6f\tcy=%.6f\n", c.cx(), c.cy());
            out << line;
        } else if (*match_cmd) {
            const BinaryImage tmpl = load_binary(match_template, opts.threshold);
            const BinaryImage query = load_binary(match_query, opts.threshold);
            const MatchScore score =
                match_score(extract_sketch(tmpl, bias, directions), centroid(tmpl), query,
                            match_no_shift ? ShiftPolicy::None : ShiftPolicy::Gravity);
            out << "w=" << score.w << "\tn_w=" << score.n_w << "\tb=" << score.b
                << "\tn_b=" << score.n_b << "\taccuracy=" << format_accuracy(score.accuracy)
                << "\n";
        } else if (*classify_cmd) {
            const TemplateSet set = load_set(classify_templates);
            BinaryImage query = load_binary(classify_in, opts.threshold);
            if (!classify_raw) {
                query = normalize(query, set.canvas_width, set.canvas_height, set.margin);
            }
            const Ranking ranking =
                classify(query, set, classify_no_shift ? ShiftPolicy::None : ShiftPolicy::Gravity);
            for (const RankedMatch& match : ranking) {
                out << match.label << "\t" << format_accuracy(match.score.accuracy) << "\n";
            }
        } else if (*ingest_cmd) {
            IngestParams params;
            params.name = ingest_name.empty() ? fs::path(ingest_manifest).stem().string()
                                              : ingest_name;
            params.bias = bias;
            params.canvas_width = canvas.width;
            params.canvas_height = canvas.height;
            params.margin = opts.margin;
            params.threshold = opts.threshold;
            std::vector<std::string> warnings;
            const TemplateSet set = ingest(ingest_manifest, params, &warnings);
            for (const std::string& warning : warnings) err << "warning: " << warning << "\n";
            save_set(set, ingest_out);
            out << "entries=" << set.entries.size() << "\n";
        } else if (*gen_cmd) {
            const Recipe recipe = parse_recipe(gen_recipe);
            const TemplateSet base = load_set(gen_templates);
            const auto corpus = generate_corpus(base, recipe, opts.seed);
            save_corpus(corpus, gen_out);
            out << "items=" << corpus.size() << "\n";
        } else if (*bench_cmd) {
            std::vector<TemplateSet> recognizers;
            for (const std::string& dir : bench_templates) recognizers.push_back(load_set(dir));
            const auto corpus = load_corpus(bench_corpus);
            const Report report =
                evaluate(corpus, recognizers,
                         bench_no_shift ? ShiftPolicy::None : ShiftPolicy::Gravity);
            write_report(report, bench_report);
            for (const ReportRow& row : report.rows) {
                char percent[32];
                std::snprintf(percent, sizeof(percent), "%.1f", row.percent);
                out << row.recognizer << "\t" << row.samples << "\t" << row.correct << "\t"
                    << percent << "\n";
            }
        } else if (*render_cmd) {
            const TemplateSet set = load_set(render_templates);
            const TemplateEntry* entry = set.find(render_label);
            if (entry == nullptr) {
                throw ConfigError("label not in set: \"" + render_label + "\"");
            }
            write_file_atomic(render_out, save_pgm(render_sketch(entry->sketch)));
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const EmptyForegroundError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace sketchmatch::cli
