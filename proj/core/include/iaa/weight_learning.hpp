#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "iaa/similarity.hpp"

namespace iaa {

/// Random survey generator settings.
struct GeneratorConfig {
    std::size_t set_count = 500;
    std::size_t min_intervals = 3;
    std::size_t max_intervals = 10;
    double value_min = 1.0;
    double value_max = 10.0;
    double crisp_probability = 0.1;
    std::uint64_t seed = 20240601;

    void validate() const;
};

/// Deterministic population of labelled random interval sets.
std::vector<IntervalSet> generate_population(const GeneratorConfig& cfg);

/// Feature rows for sampled unordered pairs of the population. When
/// max_pairs covers all pairs every pair appears once, in (i < j) order;
/// otherwise a seeded sample without replacement is taken.
struct FeatureDataset {
    std::vector<std::array<double, 6>> rows;
};

FeatureDataset build_feature_dataset(std::span<const IntervalSet> population,
                                     const RangeSpec& range, std::size_t max_pairs,
                                     std::uint64_t seed,
                                     const AttributeOptions& opt = {});

struct PcaResult {
    std::array<double, 6> loadings{};  // unit norm, largest-|.| component positive
    double eigenvalue = 0;
    std::size_t iterations = 0;
};

/// Dominant eigenvector of the feature covariance (correlation when
/// standardize) by power iteration, relative tolerance 1e-10.
PcaResult first_principal_component(const FeatureDataset& data, bool standardize = false);

struct StabilityReport {
    std::array<double, 6> mean_abs_loading{};
    std::array<double, 6> std_abs_loading{};
    std::size_t repeats = 0;
    std::string to_csv() const;
};

struct LearnedWeights {
    WeightVector weights;           // sign-aligned mean direction, renormalized
    StabilityReport stability;
    std::vector<PcaResult> runs;
};

/// Repeat generate -> featurize -> first PC with per-repeat seeds derived
/// from cfg.seed; aggregate into a stability report and a mean direction.
LearnedWeights learn_weights(const GeneratorConfig& cfg, const RangeSpec& range,
                             std::size_t max_pairs = 100000, std::size_t repeats = 10,
                             bool standardize = false,
                             const AttributeOptions& opt = {});

}  // namespace iaa
