#include "iaa/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "iaa/errors.hpp"

namespace iaa {
namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

std::string format_cell(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

RangeSpec RangeSpec::global(double min_potential, double max_potential) {
    if (!(min_potential < max_potential))
        throw ValidationError("global range requires min < max");
    RangeSpec r;
    r.kind = Kind::Global;
    r.min_potential = min_potential;
    r.max_potential = max_potential;
    return r;
}

RangeSpec RangeSpec::local() {
    RangeSpec r;
    r.kind = Kind::Local;
    return r;
}

double resolve_range(const AttributeSummary& a, const AttributeSummary& b,
                     const RangeSpec& spec) {
    if (spec.kind == RangeSpec::Kind::Global)
        return spec.max_potential - spec.min_potential;
    double lo = std::min(a.quartiles.min, b.quartiles.min);
    double hi = std::max(a.quartiles.max, b.quartiles.max);
    return hi - lo;
}

FeatureVector feature_vector(const AttributeSummary& a, const AttributeSummary& b,
                             double range) {
    if (range < 0.0 || !std::isfinite(range))
        throw ValidationError("feature range must be finite and non-negative");
    FeatureVector f;

    if (range > 0.0) {
        const auto qa = a.quartiles.values();
        const auto qb = b.quartiles.values();
        double qdiff = 0.0;
        for (std::size_t i = 0; i < qa.size(); ++i) qdiff += std::abs(qa[i] - qb[i]);
        f.quartile_distance = clamp01(qdiff / (5.0 * range));
    }

    double dx = a.centroid_x - b.centroid_x;
    double dy = a.centroid_y - b.centroid_y;
    f.centroid_distance =
        clamp01(std::sqrt(dx * dx + dy * dy) / std::sqrt(range * range + 0.25));

    double max_area = std::max(a.area, b.area);
    f.area_difference = max_area > 0.0 ? clamp01(std::abs(a.area - b.area) / max_area) : 0.0;

    f.height_difference = clamp01(std::abs(a.height - b.height));

    double max_perimeter = std::max(a.perimeter, b.perimeter);
    f.perimeter_difference =
        max_perimeter > 0.0 ? clamp01(std::abs(a.perimeter - b.perimeter) / max_perimeter) : 0.0;

    f.agreement_difference = clamp01(std::abs(a.agreement - b.agreement));
    return f;
}

WeightVector::WeightVector(const std::array<double, 6>& values) : w(values) { validate(); }

WeightVector WeightVector::defaults() {
    return WeightVector({0.320726, -0.509757, 0.100985, -0.461649, 0.444451, -0.465218});
}

WeightVector WeightVector::normalized(const std::array<double, 6>& values) {
    double norm = 0.0;
    for (double v : values) norm += v * v;
    if (!(norm > 0.0)) throw ValidationError("weight vector must be non-zero");
    norm = std::sqrt(norm);
    std::array<double, 6> unit;
    for (std::size_t i = 0; i < 6; ++i) unit[i] = values[i] / norm;
    return WeightVector(unit);
}

double WeightVector::norm_squared() const {
    double s = 0.0;
    for (double v : w) s += v * v;
    return s;
}

void WeightVector::validate() const {
    for (double v : w)
        if (!std::isfinite(v)) throw ValidationError("weights must be finite");
    if (std::abs(norm_squared() - 1.0) > 1e-6)
        throw ValidationError("weights must have unit norm");
}

double similarity(const AttributeSummary& a, const AttributeSummary& b,
                  const WeightVector& w, double range) {
    const auto f = feature_vector(a, b, range).values();
    double dissimilarity = 0.0;
    for (std::size_t i = 0; i < 6; ++i) dissimilarity += w.w[i] * w.w[i] * f[i];
    return clamp01(1.0 - dissimilarity);
}

SimilarityMatrix similarity_matrix(std::span<const AttributeSummary> items,
                                   const WeightVector& w, const RangeSpec& range) {
    SimilarityMatrix m;
    m.labels.reserve(items.size());
    for (const auto& item : items) m.labels.push_back(item.label);
    m.values.assign(items.size(), std::vector<double>(items.size(), 1.0));
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            double s = similarity(items[i], items[j], w, resolve_range(items[i], items[j], range));
            m.values[i][j] = s;
            m.values[j][i] = s;
        }
    return m;
}

SimilarityMatrix similarity_matrix(std::span<const IntervalSet> sets, const WeightVector& w,
                                   const RangeSpec& range, const AttributeOptions& opt) {
    std::vector<AttributeSummary> summaries;
    summaries.reserve(sets.size());
    for (const auto& s : sets) summaries.push_back(summarize(s, opt));
    return similarity_matrix(std::span<const AttributeSummary>(summaries), w, range);
}

std::string SimilarityMatrix::to_csv() const {
    std::ostringstream out;
    out << "label";
    for (const auto& l : labels) out << ',' << l;
    out << '\n';
    for (std::size_t i = 0; i < size(); ++i) {
        out << labels[i];
        for (std::size_t j = 0; j < size(); ++j) out << ',' << format_cell(values[i][j]);
        out << '\n';
    }
    return out.str();
}

std::string SimilarityMatrix::to_json() const {
    nlohmann::json j;
    j["labels"] = labels;
    j["similarity"] = values;
    return j.dump(2) + "\n";
}

void SimilarityMatrix::save_csv(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << to_csv();
}

void SimilarityMatrix::save_json(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << to_json();
}

WeightVector load_weights_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    const nlohmann::json* arr = nullptr;
    if (j.is_array()) {
        arr = &j;
    } else if (j.is_object() && j.contains("weights") && j["weights"].is_array()) {
        arr = &j["weights"];
    } else {
        throw ParseError(path + ": expected {\"weights\": [...]} or a bare array");
    }
    if (arr->size() != 6) throw ParseError(path + ": expected exactly 6 weights");
    std::array<double, 6> w{};
    for (std::size_t i = 0; i < 6; ++i) {
        if (!(*arr)[i].is_number()) throw ParseError(path + ": weights must be numbers");
        w[i] = (*arr)[i].get<double>();
    }
    try {
        return WeightVector(w);
    } catch (const ValidationError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string weights_to_json(const WeightVector& w) {
    nlohmann::json j;
    j["weights"] = w.w;
    return j.dump(2) + "\n";
}

void save_weights_json(const WeightVector& w, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << weights_to_json(w);
}

}  // namespace iaa
