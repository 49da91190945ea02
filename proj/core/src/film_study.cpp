#include "iaa/film_study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace iaa {
namespace {

SimilarityMatrix make_reference(std::vector<std::string> labels,
                                const std::vector<std::vector<double>>& upper) {
    SimilarityMatrix m;
    m.labels = std::move(labels);
    const std::size_t k = m.labels.size();
    m.values.assign(k, std::vector<double>(k, 1.0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            m.values[i][j] = upper[i][j - i - 1];
            m.values[j][i] = upper[i][j - i - 1];
        }
    return m;
}

std::string format3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%+.4f", v);
    return buf;
}

}  // namespace

const IntervalDataset& film_dataset() {
    static const IntervalDataset dataset = [] {
        IntervalDataset d;
        d.item_labels = {"Film A", "Film B", "Film C", "Film D", "Film E",
                         "Film F", "Film G", "Film H", "Film I", "Film J"};
        d.source_labels = {"Critic 1", "Critic 2", "Critic 3", "Critic 4", "Critic 5"};
        d.cells = {
            {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}},
            {{5, 6}, {6, 7}, {10, 10}, {3, 4}, {5, 5}},
            {{2, 3}, {1, 3}, {4, 7}, {1, 3}, {4, 5}},
            {{6, 6}, {6, 10}, {8, 10}, {5, 9}, {2, 3}},
            {{1, 4}, {2, 3}, {7, 8}, {3, 3}, {2, 4.4}},
            {{7, 7}, {8, 9.2}, {9, 10}, {8, 9}, {9, 10}},
            {{8, 9}, {9, 10}, {9.5, 9.5}, {9, 10}, {10, 10}},
            {{1.5, 6.5}, {3, 10}, {1, 10}, {2, 9.3}, {8, 8.8}},
            {{8, 8}, {8, 8}, {8, 8}, {8, 8}, {8, 8}},
            {{10, 10}, {10, 10}, {10, 10}, {10, 10}, {10, 10}},
        };
        d.validate();
        return d;
    }();
    return dataset;
}

const SimilarityMatrix& reference_film_similarity() {
    static const SimilarityMatrix m = make_reference(
        film_dataset().item_labels,
        {
            {0.4830, 0.5527, 0.3993, 0.5900, 0.3867, 0.3747, 0.4444, 0.7182, 0.6377},
            {0.7422, 0.7686, 0.7028, 0.6342, 0.6829, 0.6859, 0.5882, 0.5173},
            {0.8120, 0.9461, 0.6308, 0.5851, 0.7351, 0.4545, 0.3740},
            {0.7755, 0.7633, 0.7211, 0.8305, 0.5881, 0.5222},
            {0.6781, 0.5471, 0.7843, 0.5020, 0.4215},
            {0.8498, 0.7072, 0.6629, 0.6546},
            {0.5836, 0.6559, 0.6865},
            {0.5511, 0.4835},
            {0.9195},
        });
    return m;
}

const SimilarityMatrix& reference_critic_similarity() {
    static const SimilarityMatrix m = make_reference(film_dataset().source_labels,
                                                     {
                                                         {0.8635, 0.8069, 0.8925, 0.9151},
                                                         {0.9344, 0.9706, 0.8802},
                                                         {0.9123, 0.8231},
                                                         {0.9088},
                                                     });
    return m;
}

std::string VariantCombo::name() const {
    std::string s = "perimeter=";
    s += to_string(options.perimeter);
    s += ",quartiles=";
    s += to_string(options.quartiles);
    s += ",ar-loop=";
    s += to_string(options.agreement);
    return s;
}

std::vector<VariantCombo> variant_grid() {
    std::vector<VariantCombo> grid;
    for (auto p : {PerimeterMode::Closed, PerimeterMode::Literal})
        for (auto q : {QuartileMethod::Halves, QuartileMethod::Interpolated})
            for (auto a : {AgreementLoop::DownToTwo, AgreementLoop::DownToOne})
                grid.push_back(VariantCombo{AttributeOptions{p, q, a}});
    return grid;
}

std::vector<CellDeviation> VariantOutcome::cells_over(double threshold) const {
    std::vector<CellDeviation> out;
    for (const auto& d : deviations)
        if (std::abs(d.deviation) > threshold) out.push_back(d);
    return out;
}

ReconciliationReport reconcile_film_study(const WeightVector& w) {
    const auto sets = film_dataset().row_sets();
    const auto& reference = reference_film_similarity();
    const RangeSpec range = RangeSpec::global(1.0, 10.0);

    ReconciliationReport report;
    for (const auto& combo : variant_grid()) {
        VariantOutcome outcome;
        outcome.combo = combo;
        outcome.matrix = similarity_matrix(std::span<const IntervalSet>(sets), w, range,
                                           combo.options);
        double sum = 0.0;
        std::size_t cells = 0;
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                CellDeviation d;
                d.row = i;
                d.col = j;
                d.computed = outcome.matrix.values[i][j];
                d.reference = reference.values[i][j];
                d.deviation = d.computed - d.reference;
                outcome.deviations.push_back(d);
                outcome.max_abs_deviation =
                    std::max(outcome.max_abs_deviation, std::abs(d.deviation));
                sum += std::abs(d.deviation);
                ++cells;
            }
        outcome.mean_abs_deviation = sum / static_cast<double>(cells);
        report.outcomes.push_back(std::move(outcome));
    }
    for (std::size_t i = 1; i < report.outcomes.size(); ++i)
        if (report.outcomes[i].max_abs_deviation <
            report.outcomes[report.best_index].max_abs_deviation)
            report.best_index = i;
    return report;
}

std::string ReconciliationReport::to_text() const {
    std::ostringstream out;
    out << "Variant reconciliation against the bundled film reference values\n";
    out << "(global range 1..10, published values rounded to 4 decimals)\n\n";
    char buf[128];
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        std::snprintf(buf, sizeof(buf), "%-54s max|dev| %.4f  mean|dev| %.4f%s",
                      o.combo.name().c_str(), o.max_abs_deviation, o.mean_abs_deviation,
                      i == best_index ? "  <- best" : "");
        out << buf << '\n';
    }
    const auto& b = best();
    const auto& labels = reference_film_similarity().labels;
    auto over = b.cells_over(0.01);
    std::sort(over.begin(), over.end(), [](const CellDeviation& x, const CellDeviation& y) {
        return std::abs(x.deviation) > std::abs(y.deviation);
    });
    out << "\nCells exceeding |0.01| under " << b.combo.name() << " (" << over.size()
        << " of " << b.deviations.size() << "):\n";
    for (const auto& d : over) {
        std::snprintf(buf, sizeof(buf), "  %s vs %s: computed %.4f, reference %.4f, dev %s",
                      labels[d.row].c_str(), labels[d.col].c_str(), d.computed, d.reference,
                      format3(d.deviation).c_str());
        out << buf << '\n';
    }
    out << "\nVariant-insensitive crisp cells under " << b.combo.name() << ":\n";
    for (const auto& d : b.deviations) {
        const bool crisp_pair = (labels[d.row] == "Film A" || labels[d.row] == "Film I" ||
                                 labels[d.row] == "Film J") &&
                                (labels[d.col] == "Film A" || labels[d.col] == "Film I" ||
                                 labels[d.col] == "Film J");
        if (!crisp_pair) continue;
        std::snprintf(buf, sizeof(buf), "  %s vs %s: computed %.6f, reference %.4f, |dev| %.2e",
                      labels[d.row].c_str(), labels[d.col].c_str(), d.computed, d.reference,
                      std::abs(d.deviation));
        out << buf << '\n';
    }
    return out.str();
}

std::string ReconciliationReport::to_json() const {
    nlohmann::json j;
    const auto& labels = reference_film_similarity().labels;
    auto variants = nlohmann::json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        nlohmann::json v;
        v["variant"] = o.combo.name();
        v["max_abs_deviation"] = o.max_abs_deviation;
        v["mean_abs_deviation"] = o.mean_abs_deviation;
        v["best"] = i == best_index;
        auto cells = nlohmann::json::array();
        for (const auto& d : o.deviations) {
            nlohmann::json c;
            c["pair"] = {labels[d.row], labels[d.col]};
            c["computed"] = d.computed;
            c["reference"] = d.reference;
            c["deviation"] = d.deviation;
            cells.push_back(std::move(c));
        }
        v["cells"] = std::move(cells);
        variants.push_back(std::move(v));
    }
    j["variants"] = std::move(variants);
    return j.dump(2) + "\n";
}

CriticAnalysis analyse_critics(const WeightVector& w, const AttributeOptions& opt) {
    const auto critics = film_dataset().transpose().row_sets();
    const auto& reference = reference_critic_similarity();

    CriticAnalysis a;
    a.global_matrix = similarity_matrix(std::span<const IntervalSet>(critics), w,
                                        RangeSpec::global(1.0, 10.0), opt);
    a.local_matrix =
        similarity_matrix(std::span<const IntervalSet>(critics), w, RangeSpec::local(), opt);

    auto scan = [&](const SimilarityMatrix& m, std::size_t& bi, std::size_t& bj,
                    double& max_dev) {
        double best = -1.0;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                if (m.values[i][j] > best) {
                    best = m.values[i][j];
                    bi = i;
                    bj = j;
                }
                max_dev = std::max(max_dev, std::abs(m.values[i][j] - reference.values[i][j]));
            }
    };
    scan(a.global_matrix, a.best_pair_global_i, a.best_pair_global_j, a.global_max_dev);
    scan(a.local_matrix, a.best_pair_local_i, a.best_pair_local_j, a.local_max_dev);
    return a;
}

std::string CriticAnalysis::to_text() const {
    std::ostringstream out;
    const auto& labels = global_matrix.labels;
    char buf[160];
    out << "Critic-against-critic comparison (transposed survey)\n\n";
    std::snprintf(buf, sizeof(buf),
                  "global 1..10 range: closest pair %s / %s (%.4f), max dev from reference %.4f",
                  labels[best_pair_global_i].c_str(), labels[best_pair_global_j].c_str(),
                  global_matrix.values[best_pair_global_i][best_pair_global_j], global_max_dev);
    out << buf << '\n';
    std::snprintf(buf, sizeof(buf),
                  "local range:        closest pair %s / %s (%.4f), max dev from reference %.4f",
                  labels[best_pair_local_i].c_str(), labels[best_pair_local_j].c_str(),
                  local_matrix.values[best_pair_local_i][best_pair_local_j], local_max_dev);
    out << buf << '\n';
    out << "closer to the reference: "
        << (global_max_dev <= local_max_dev ? "global range" : "local range") << '\n';
    return out.str();
}

}  // namespace iaa
