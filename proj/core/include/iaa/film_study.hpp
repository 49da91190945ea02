#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "iaa/interval.hpp"
#include "iaa/similarity.hpp"

namespace iaa {

/// Bundled demo survey: ten films scored with intervals on a 1..10 scale by
/// five critics.
const IntervalDataset& film_dataset();

/// Reference similarity values shipped with the film study, used as the
/// regression target by the reconciliation run.
const SimilarityMatrix& reference_film_similarity();

/// Reference values for the critic-against-critic comparison (transposed
/// survey).
const SimilarityMatrix& reference_critic_similarity();

struct VariantCombo {
    AttributeOptions options;
    std::string name() const;
};

/// The full runtime-variant grid (perimeter x quartile x agreement loop).
std::vector<VariantCombo> variant_grid();

struct CellDeviation {
    std::size_t row = 0, col = 0;
    double computed = 0, reference = 0, deviation = 0;
};

struct VariantOutcome {
    VariantCombo combo;
    SimilarityMatrix matrix;
    double max_abs_deviation = 0;
    double mean_abs_deviation = 0;
    std::vector<CellDeviation> deviations;  // upper triangle, i < j

    std::vector<CellDeviation> cells_over(double threshold) const;
};

struct ReconciliationReport {
    std::vector<VariantOutcome> outcomes;
    std::size_t best_index = 0;  // smallest max |deviation|

    const VariantOutcome& best() const { return outcomes[best_index]; }
    std::string to_text() const;
    std::string to_json() const;
};

/// Compare every variant combination against the reference film matrix
/// (global 1..10 range, default weights).
ReconciliationReport reconcile_film_study(const WeightVector& w = WeightVector::defaults());

struct CriticAnalysis {
    SimilarityMatrix global_matrix;  // global 1..10 range
    SimilarityMatrix local_matrix;   // per-pair local range
    std::size_t best_pair_global_i = 0, best_pair_global_j = 0;
    std::size_t best_pair_local_i = 0, best_pair_local_j = 0;
    double global_max_dev = 0;  // vs reference critic values
    double local_max_dev = 0;

    std::string to_text() const;
};

/// Critic-against-critic comparison on the transposed survey under both range
/// policies, reporting which reproduces the reference values better.
CriticAnalysis analyse_critics(const WeightVector& w = WeightVector::defaults(),
                               const AttributeOptions& opt = {});

}  // namespace iaa
