#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "iaa/attributes.hpp"

namespace iaa {

/// Score-scale context for the distance-like features. Global: the scale is
/// known up front (films are scored 1..10, say). Local: fall back to the span
/// of the two supports being compared.
struct RangeSpec {
    enum class Kind { Global, Local };

    Kind kind = Kind::Local;
    double min_potential = 0;
    double max_potential = 0;

    static RangeSpec global(double min_potential, double max_potential);
    static RangeSpec local();
};

double resolve_range(const AttributeSummary& a, const AttributeSummary& b, const RangeSpec& spec);

/// The six normalized feature differences, each in [0, 1].
struct FeatureVector {
    double quartile_distance = 0;    // mean |quartile difference| / range
    double centroid_distance = 0;    // euclidean centroid gap / largest possible
    double area_difference = 0;      // |area gap| / larger area
    double height_difference = 0;    // |height gap|
    double perimeter_difference = 0; // |perimeter gap| / larger perimeter
    double agreement_difference = 0; // |agreement-ratio gap|

    std::array<double, 6> values() const {
        return {quartile_distance,  centroid_distance,  area_difference,
                height_difference, perimeter_difference, agreement_difference};
    }
};

FeatureVector feature_vector(const AttributeSummary& a, const AttributeSummary& b, double range);

/// Unit-norm feature weights. Weights enter the measure squared, so only
/// magnitudes matter; the sum of squares must be 1 within 1e-6.
struct WeightVector {
    std::array<double, 6> w{};

    WeightVector() = default;
    explicit WeightVector(const std::array<double, 6>& values);  // validates

    /// Principal-component loadings fitted on randomly generated populations.
    static WeightVector defaults();
    static WeightVector normalized(const std::array<double, 6>& values);

    double norm_squared() const;
    void validate() const;
};

/// S(a, b) = 1 - sum w_i^2 * f_i, clamped into [0, 1].
double similarity(const AttributeSummary& a, const AttributeSummary& b,
                  const WeightVector& w, double range);

struct SimilarityMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;

    std::size_t size() const { return labels.size(); }
    double at(std::size_t i, std::size_t j) const { return values[i][j]; }

    std::string to_csv() const;
    std::string to_json() const;
    void save_csv(const std::string& path) const;
    void save_json(const std::string& path) const;
};

/// Pairwise similarity of items under one configuration. Symmetric with unit
/// diagonal.
SimilarityMatrix similarity_matrix(std::span<const IntervalSet> sets, const WeightVector& w,
                                   const RangeSpec& range, const AttributeOptions& opt = {});
SimilarityMatrix similarity_matrix(std::span<const AttributeSummary> items, const WeightVector& w,
                                   const RangeSpec& range);

/// Weights JSON: {"weights":[w1,...,w6]} (a bare array is also accepted).
WeightVector load_weights_json(const std::string& path);
void save_weights_json(const WeightVector& w, const std::string& path);
std::string weights_to_json(const WeightVector& w);

}  // namespace iaa
