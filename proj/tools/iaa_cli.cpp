#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iaa/attributes.hpp"
#include "iaa/curve.hpp"
#include "iaa/dataset_io.hpp"
#include "iaa/errors.hpp"
#include "iaa/film_study.hpp"
#include "iaa/interval.hpp"
#include "iaa/plot.hpp"
#include "iaa/similarity.hpp"
#include "iaa/weight_learning.hpp"

namespace fs = std::filesystem;

namespace {

// Relative output paths land in IAA_OUTPUT_DIR when it is set.
std::string resolve_output(const std::string& path) {
    if (path.empty() || fs::path(path).is_absolute()) return path;
    const char* dir = std::getenv("IAA_OUTPUT_DIR");
    if (!dir || !*dir) return path;
    return (fs::path(dir) / path).string();
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    const std::string full = resolve_output(path);
    if (const auto parent = fs::path(full).parent_path(); !parent.empty())
        fs::create_directories(parent);
    std::ofstream out(full);
    if (!out) throw std::runtime_error("cannot write " + full);
    out << text;
}

iaa::IntervalDataset load_input(const std::string& path, bool transpose) {
    if (!fs::exists(path)) {
        std::cerr << "error: no such file: " << path << '\n';
        std::exit(2);
    }
    auto d = iaa::load_dataset(path);
    return transpose ? d.transpose() : d;
}

iaa::RangeSpec parse_range(const std::string& text) {
    if (text == "local") return iaa::RangeSpec::local();
    if (text.rfind("global:", 0) == 0) {
        const auto rest = text.substr(7);
        const auto sep = rest.find(':');
        if (sep != std::string::npos) {
            try {
                const double lo = std::stod(rest.substr(0, sep));
                const double hi = std::stod(rest.substr(sep + 1));
                return iaa::RangeSpec::global(lo, hi);
            } catch (const std::exception&) {
            }
        }
    }
    throw iaa::ValidationError("range must be 'local' or 'global:MIN:MAX', got '" + text + "'");
}

struct VariantFlags {
    std::string perimeter = "closed";
    std::string quartiles = "halves";
    std::string ar_loop = "to2";

    iaa::AttributeOptions options() const {
        iaa::AttributeOptions opt;
        opt.perimeter = perimeter == "literal" ? iaa::PerimeterMode::Literal
                                               : iaa::PerimeterMode::Closed;
        opt.quartiles = quartiles == "interp" ? iaa::QuartileMethod::Interpolated
                                              : iaa::QuartileMethod::Halves;
        opt.agreement = ar_loop == "to1" ? iaa::AgreementLoop::DownToOne
                                         : iaa::AgreementLoop::DownToTwo;
        return opt;
    }
};

void add_variant_flags(CLI::App* cmd, VariantFlags& v) {
    cmd->add_option("--perimeter", v.perimeter, "Perimeter mode")
        ->check(CLI::IsMember({"closed", "literal"}))
        ->capture_default_str();
    cmd->add_option("--quartiles", v.quartiles, "Quartile convention")
        ->check(CLI::IsMember({"halves", "interp"}))
        ->capture_default_str();
    cmd->add_option("--ar-loop", v.ar_loop, "Agreement-ratio loop bound")
        ->check(CLI::IsMember({"to2", "to1"}))
        ->capture_default_str();
}

std::string attrs_csv(const std::vector<iaa::AttributeSummary>& rows) {
    std::ostringstream out;
    out << "label,area,perimeter,centroid_x,centroid_y,height,min,q1,q2,q3,max,agreement_ratio\n";
    for (const auto& a : rows) {
        out << a.label;
        for (double v : {a.area, a.perimeter, a.centroid_x, a.centroid_y, a.height})
            out << ',' << iaa::format_double(v);
        for (double v : a.quartiles.values()) out << ',' << iaa::format_double(v);
        out << ',' << iaa::format_double(a.agreement) << '\n';
    }
    return out.str();
}

std::string attrs_json(const std::vector<iaa::AttributeSummary>& rows) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& a = rows[i];
        out << "  {\"label\":\"" << a.label << "\",\"area\":" << iaa::format_double(a.area)
            << ",\"perimeter\":" << iaa::format_double(a.perimeter)
            << ",\"centroid_x\":" << iaa::format_double(a.centroid_x)
            << ",\"centroid_y\":" << iaa::format_double(a.centroid_y)
            << ",\"height\":" << iaa::format_double(a.height) << ",\"quartiles\":[";
        const auto q = a.quartiles.values();
        for (std::size_t k = 0; k < q.size(); ++k)
            out << (k ? "," : "") << iaa::format_double(q[k]);
        out << "],\"agreement_ratio\":" << iaa::format_double(a.agreement) << '}'
            << (i + 1 < rows.size() ? "," : "") << '\n';
    }
    out << "]\n";
    return out.str();
}

std::vector<iaa::AttributeSummary> summarize_dataset(const iaa::IntervalDataset& d,
                                                    const iaa::AttributeOptions& opt) {
    std::vector<iaa::AttributeSummary> rows;
    rows.reserve(d.item_count());
    for (const auto& s : d.row_sets()) rows.push_back(iaa::summarize(s, opt));
    return rows;
}

int cmd_build(const std::string& input, bool transpose, const std::string& output) {
    const auto d = load_input(input, transpose);
    std::vector<iaa::MembershipCurve> curves;
    for (const auto& s : d.row_sets()) curves.push_back(iaa::build_curve(s));
    if (output.empty()) {
        for (const auto& c : curves) std::cout << iaa::curve_to_json(c) << '\n';
    } else {
        iaa::save_curves_json(curves, resolve_output(output));
    }
    return 0;
}

int cmd_attrs(const std::string& input, bool transpose, const VariantFlags& v,
              const std::string& format, const std::string& output) {
    const auto d = load_input(input, transpose);
    const auto rows = summarize_dataset(d, v.options());
    write_or_print(format == "json" ? attrs_json(rows) : attrs_csv(rows), output);
    return 0;
}

int cmd_sim(const std::string& input, bool transpose, const VariantFlags& v,
            const std::string& range_text, const std::string& weights_path,
            const std::string& format, const std::string& output) {
    const auto d = load_input(input, transpose);
    const auto range = parse_range(range_text);
    const auto w = weights_path.empty() ? iaa::WeightVector::defaults()
                                        : iaa::load_weights_json(weights_path);
    const auto sets = d.row_sets();
    const auto m = iaa::similarity_matrix(std::span<const iaa::IntervalSet>(sets), w, range,
                                          v.options());
    write_or_print(format == "json" ? m.to_json() : m.to_csv(), output);
    return 0;
}

int cmd_weights(const iaa::GeneratorConfig& cfg, const std::string& range_text,
                std::size_t pairs, std::size_t repeats, bool standardize,
                const std::string& output, const std::string& stability_path,
                const VariantFlags& v) {
    const auto range = range_text.empty()
                           ? iaa::RangeSpec::global(cfg.value_min, cfg.value_max)
                           : parse_range(range_text);
    const auto learned = iaa::learn_weights(cfg, range, pairs, repeats, standardize, v.options());
    write_or_print(iaa::weights_to_json(learned.weights), output);
    if (!stability_path.empty())
        write_or_print(learned.stability.to_csv(), stability_path);
    else
        std::cerr << learned.stability.to_csv();
    return 0;
}

int cmd_demo(const std::string& variants, const std::string& weights_path) {
    const auto w = weights_path.empty() ? iaa::WeightVector::defaults()
                                        : iaa::load_weights_json(weights_path);
    const auto& films = iaa::film_dataset();

    std::cout << "Film attribute panel (defaults)\n";
    std::cout << attrs_csv(summarize_dataset(films, {})) << '\n';

    auto report = iaa::reconcile_film_study(w);
    if (variants == "defaults") {
        // keep only the default-option outcome, preserving the report shape
        iaa::ReconciliationReport slim;
        for (auto& o : report.outcomes)
            if (o.combo.options == iaa::AttributeOptions{}) slim.outcomes.push_back(std::move(o));
        slim.best_index = 0;
        report = std::move(slim);
    }
    std::cout << report.to_text() << '\n';

    std::cout << "Best-variant film matrix\n";
    std::cout << report.best().matrix.to_csv() << '\n';

    std::cout << iaa::analyse_critics(w).to_text();
    return 0;
}

int cmd_plot(const std::string& input, bool transpose, const std::string& outdir, int width,
             int height) {
    const auto d = load_input(input, transpose);
    std::string dir = outdir;
    if (dir.empty()) {
        const char* env = std::getenv("IAA_OUTPUT_DIR");
        dir = env && *env ? env : ".";
    } else {
        dir = resolve_output(dir);
    }
    fs::create_directories(dir);
    iaa::PlotOptions opt;
    opt.width = width;
    opt.height = height;
    for (const auto& s : d.row_sets()) {
        const auto c = iaa::build_curve(s);
        std::string stem = c.label;
        for (auto& ch : stem)
            if (ch == '/' || ch == ' ') ch = '_';
        iaa::save_curve_svg(c, (fs::path(dir) / (stem + ".svg")).string(), opt);
        iaa::save_curve_breakpoints_csv(c, (fs::path(dir) / (stem + ".csv")).string());
    }
    std::cout << d.item_count() << " curves written to " << dir << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval-agreement fuzzy numbers: construction, attributes, similarity"};
    app.require_subcommand(1);

    std::string input, output, format = "csv", range_text = "local";
    std::string weights_path, variants = "all", outdir, stability_path;
    bool transpose = false, standardize = false;
    int width = 640, height = 360;
    std::size_t pairs = 100000, repeats = 10;
    VariantFlags vflags;
    iaa::GeneratorConfig gen;

    auto* build = app.add_subcommand("build", "Construct membership curves from a dataset");
    build->add_option("-i,--input", input, "Dataset file (CSV or JSON)")->required();
    build->add_flag("-t,--transpose", transpose, "Swap items and sources");
    build->add_option("-o,--output", output, "Curve bundle path (default: stdout)");

    auto* attrs = app.add_subcommand("attrs", "Attribute table per item");
    attrs->add_option("-i,--input", input, "Dataset file (CSV or JSON)")->required();
    attrs->add_flag("-t,--transpose", transpose, "Swap items and sources");
    attrs->add_option("-f,--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    attrs->add_option("-o,--output", output, "Output path (default: stdout)");
    add_variant_flags(attrs, vflags);

    auto* sim = app.add_subcommand("sim", "Pairwise similarity matrix");
    sim->add_option("-i,--input", input, "Dataset file (CSV or JSON)")->required();
    sim->add_flag("-t,--transpose", transpose, "Swap items and sources");
    sim->add_option("--range", range_text, "'local' or 'global:MIN:MAX'")->capture_default_str();
    sim->add_option("--weights", weights_path, "Weight vector JSON");
    sim->add_option("-f,--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sim->add_option("-o,--output", output, "Output path (default: stdout)");
    add_variant_flags(sim, vflags);

    auto* weights = app.add_subcommand("weights", "Learn feature weights on random populations");
    weights->add_option("--sets", gen.set_count, "Population size")->capture_default_str();
    weights->add_option("--min-intervals", gen.min_intervals, "Smallest set size")
        ->capture_default_str();
    weights->add_option("--max-intervals", gen.max_intervals, "Largest set size")
        ->capture_default_str();
    weights->add_option("--value-min", gen.value_min, "Score scale lower bound")
        ->capture_default_str();
    weights->add_option("--value-max", gen.value_max, "Score scale upper bound")
        ->capture_default_str();
    weights->add_option("--crisp-prob", gen.crisp_probability, "Probability of a crisp interval")
        ->capture_default_str();
    weights->add_option("--seed", gen.seed, "Base RNG seed")->capture_default_str();
    weights->add_option("--pairs", pairs, "Pair sample cap per repeat")->capture_default_str();
    weights->add_option("--repeats", repeats, "Pipeline repetitions")->capture_default_str();
    weights->add_flag("--standardize", standardize, "Correlation instead of covariance");
    weights->add_option("--range", range_text, "'local' or 'global:MIN:MAX' "
                        "(default: global over the value scale)");
    weights->add_option("-o,--output", output, "Weights JSON path (default: stdout)");
    weights->add_option("--stability", stability_path, "Stability report CSV path");
    add_variant_flags(weights, vflags);

    auto* demo = app.add_subcommand("demo", "Reproduce the bundled film/critic study");
    demo->add_option("--variants", variants, "all or defaults")
        ->check(CLI::IsMember({"all", "defaults"}))
        ->capture_default_str();
    demo->add_option("--weights", weights_path, "Weight vector JSON");

    auto* plot = app.add_subcommand("plot", "SVG step plot + breakpoint CSV per curve");
    plot->add_option("-i,--input", input, "Dataset file (CSV or JSON)")->required();
    plot->add_flag("-t,--transpose", transpose, "Swap items and sources");
    plot->add_option("-d,--outdir", outdir, "Output directory (default: IAA_OUTPUT_DIR or .)");
    plot->add_option("--width", width, "SVG width in px")->capture_default_str();
    plot->add_option("--height", height, "SVG height in px")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(input, transpose, output);
        if (attrs->parsed()) return cmd_attrs(input, transpose, vflags, format, output);
        if (sim->parsed())
            return cmd_sim(input, transpose, vflags, range_text, weights_path, format, output);
        if (weights->parsed()) {
            const std::string wr = weights->count("--range") ? range_text : "";
            return cmd_weights(gen, wr, pairs, repeats, standardize, output, stability_path,
                               vflags);
        }
        if (demo->parsed()) return cmd_demo(variants, weights_path);
        if (plot->parsed()) return cmd_plot(input, transpose, outdir, width, height);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
