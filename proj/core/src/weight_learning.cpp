#include "iaa/weight_learning.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <utility>

#include "iaa/errors.hpp"

namespace iaa {
namespace {

constexpr const char* kFeatureNames[6] = {"quartile_distance",  "centroid_distance",
                                          "area_difference",    "height_difference",
                                          "perimeter_difference", "agreement_difference"};

using Matrix6 = std::array<std::array<double, 6>, 6>;

std::array<double, 6> multiply(const Matrix6& m, const std::array<double, 6>& v) {
    std::array<double, 6> out{};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) out[i] += m[i][j] * v[j];
    return out;
}

double norm(const std::array<double, 6>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

void sign_align_largest(std::array<double, 6>& v) {
    std::size_t top = 0;
    for (std::size_t i = 1; i < 6; ++i)
        if (std::abs(v[i]) > std::abs(v[top])) top = i;
    if (v[top] < 0.0)
        for (double& x : v) x = -x;
}

}  // namespace

void GeneratorConfig::validate() const {
    if (set_count < 2) throw ValidationError("population needs at least two sets");
    if (min_intervals == 0) throw ValidationError("sets need at least one interval");
    if (min_intervals > max_intervals)
        throw ValidationError("min_intervals must not exceed max_intervals");
    if (!(value_min < value_max)) throw ValidationError("value range requires min < max");
    if (!(crisp_probability >= 0.0 && crisp_probability <= 1.0))
        throw ValidationError("crisp_probability must lie in [0, 1]");
}

std::vector<IntervalSet> generate_population(const GeneratorConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> count_dist(cfg.min_intervals, cfg.max_intervals);
    std::uniform_real_distribution<double> value_dist(cfg.value_min, cfg.value_max);
    std::uniform_real_distribution<double> unit_dist(0.0, 1.0);

    std::vector<IntervalSet> population;
    population.reserve(cfg.set_count);
    for (std::size_t k = 0; k < cfg.set_count; ++k) {
        std::size_t n = count_dist(rng);
        std::vector<Interval> intervals;
        intervals.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (unit_dist(rng) < cfg.crisp_probability) {
                double v = value_dist(rng);
                intervals.emplace_back(v, v);
            } else {
                double a = value_dist(rng);
                double b = value_dist(rng);
                intervals.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
        population.emplace_back("set_" + std::to_string(k + 1), std::move(intervals));
    }
    return population;
}

FeatureDataset build_feature_dataset(std::span<const IntervalSet> population,
                                     const RangeSpec& range, std::size_t max_pairs,
                                     std::uint64_t seed, const AttributeOptions& opt) {
    if (population.size() < 2) throw ValidationError("need at least two sets to form pairs");
    if (max_pairs == 0) throw ValidationError("max_pairs must be positive");

    std::vector<AttributeSummary> summaries;
    summaries.reserve(population.size());
    for (const auto& s : population) summaries.push_back(summarize(s, opt));

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(population.size() * (population.size() - 1) / 2);
    for (std::uint32_t i = 0; i < population.size(); ++i)
        for (std::uint32_t j = i + 1; j < population.size(); ++j) pairs.emplace_back(i, j);

    if (pairs.size() > max_pairs) {
        std::mt19937_64 rng(seed);
        for (std::size_t k = 0; k < max_pairs; ++k) {
            std::uniform_int_distribution<std::size_t> pick(k, pairs.size() - 1);
            std::swap(pairs[k], pairs[pick(rng)]);
        }
        pairs.resize(max_pairs);
    }

    FeatureDataset data;
    data.rows.reserve(pairs.size());
    for (const auto& [i, j] : pairs) {
        double r = resolve_range(summaries[i], summaries[j], range);
        data.rows.push_back(feature_vector(summaries[i], summaries[j], r).values());
    }
    return data;
}

PcaResult first_principal_component(const FeatureDataset& data, bool standardize) {
    if (data.rows.size() < 2) throw ValidationError("need at least two feature rows");
    const double m = static_cast<double>(data.rows.size());

    std::array<double, 6> mean{};
    for (const auto& row : data.rows)
        for (std::size_t i = 0; i < 6; ++i) mean[i] += row[i];
    for (double& v : mean) v /= m;

    Matrix6 cov{};
    for (const auto& row : data.rows)
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i; j < 6; ++j)
                cov[i][j] += (row[i] - mean[i]) * (row[j] - mean[j]);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i; j < 6; ++j) {
            cov[i][j] /= m - 1.0;
            cov[j][i] = cov[i][j];
        }

    if (standardize) {
        std::array<double, 6> sd{};
        for (std::size_t i = 0; i < 6; ++i) {
            sd[i] = std::sqrt(cov[i][i]);
            if (sd[i] == 0.0) throw ValidationError("zero-variance feature: cannot standardize");
        }
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) cov[i][j] /= sd[i] * sd[j];
    }

    PcaResult result;
    std::array<double, 6> v;
    v.fill(1.0 / std::sqrt(6.0));
    double lambda = 0.0;
    constexpr std::size_t kMaxIterations = 500000;
    for (std::size_t it = 1; it <= kMaxIterations; ++it) {
        auto next = multiply(cov, v);
        double len = norm(next);
        if (len == 0.0) throw ValidationError("feature covariance is zero");
        for (double& x : next) x /= len;
        double next_lambda = 0.0;
        {
            auto cv = multiply(cov, next);
            for (std::size_t i = 0; i < 6; ++i) next_lambda += next[i] * cv[i];
        }
        result.iterations = it;
        // The Rayleigh quotient settles quadratically faster than the vector,
        // so convergence is judged on the iterate itself (up to sign).
        double step = 0.0;
        for (std::size_t i = 0; i < 6; ++i) step = std::max(step, std::abs(next[i] - v[i]));
        double flipped = 0.0;
        for (std::size_t i = 0; i < 6; ++i) flipped = std::max(flipped, std::abs(next[i] + v[i]));
        v = next;
        lambda = next_lambda;
        if (std::min(step, flipped) <= 1e-10 && it > 1) break;
    }
    sign_align_largest(v);
    result.loadings = v;
    result.eigenvalue = lambda;
    return result;
}

std::string StabilityReport::to_csv() const {
    std::ostringstream out;
    out << "feature,mean_abs_loading,std_abs_loading\n";
    char buf[64];
    for (std::size_t i = 0; i < 6; ++i) {
        std::snprintf(buf, sizeof(buf), "%s,%.10g,%.10g", kFeatureNames[i], mean_abs_loading[i],
                      std_abs_loading[i]);
        out << buf << '\n';
    }
    return out.str();
}

LearnedWeights learn_weights(const GeneratorConfig& cfg, const RangeSpec& range,
                             std::size_t max_pairs, std::size_t repeats, bool standardize,
                             const AttributeOptions& opt) {
    cfg.validate();
    if (repeats == 0) throw ValidationError("need at least one repeat");

    std::vector<PcaResult> runs;
    runs.reserve(repeats);
    for (std::size_t r = 0; r < repeats; ++r) {
        GeneratorConfig run_cfg = cfg;
        run_cfg.seed = cfg.seed + r;
        auto population = generate_population(run_cfg);
        auto data = build_feature_dataset(population, range, max_pairs,
                                          run_cfg.seed ^ 0x517cc1b727220a95ULL, opt);
        runs.push_back(first_principal_component(data, standardize));
    }

    StabilityReport stability;
    stability.repeats = repeats;
    for (std::size_t i = 0; i < 6; ++i) {
        double sum = 0.0;
        for (const auto& run : runs) sum += std::abs(run.loadings[i]);
        stability.mean_abs_loading[i] = sum / static_cast<double>(repeats);
        double sq = 0.0;
        for (const auto& run : runs) {
            double d = std::abs(run.loadings[i]) - stability.mean_abs_loading[i];
            sq += d * d;
        }
        stability.std_abs_loading[i] =
            repeats > 1 ? std::sqrt(sq / static_cast<double>(repeats - 1)) : 0.0;
    }

    // Mean direction with every run aligned to the first before averaging.
    std::array<double, 6> mean_dir{};
    for (const auto& run : runs) {
        double dot = 0.0;
        for (std::size_t i = 0; i < 6; ++i) dot += run.loadings[i] * runs.front().loadings[i];
        double sign = dot < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < 6; ++i) mean_dir[i] += sign * run.loadings[i];
    }
    sign_align_largest(mean_dir);

    return LearnedWeights{WeightVector::normalized(mean_dir), std::move(stability),
                          std::move(runs)};
}

}  // namespace iaa
