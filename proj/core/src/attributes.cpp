#include "iaa/attributes.hpp"

#include <algorithm>
#include <cmath>

#include "iaa/errors.hpp"

namespace iaa {
namespace {

void require_regions(const MembershipCurve& c) {
    if (c.regions.empty()) throw ValidationError("curve has no regions");
}

double median_of(const std::vector<double>& v, std::size_t begin, std::size_t count) {
    if (count == 0) throw ValidationError("median of an empty range");
    std::size_t mid = begin + count / 2;
    if (count % 2 == 1) return v[mid];
    return (v[mid - 1] + v[mid]) / 2.0;
}

double rank_interpolate(const std::vector<double>& v, double p) {
    double rank = p * static_cast<double>(v.size() - 1);
    double lo = std::floor(rank);
    std::size_t i = static_cast<std::size_t>(lo);
    if (i + 1 >= v.size()) return v.back();
    return v[i] + (rank - lo) * (v[i + 1] - v[i]);
}

FiveNumberSummary summary_of_sorted(const std::vector<double>& v, QuartileMethod m) {
    FiveNumberSummary q;
    q.min = v.front();
    q.max = v.back();
    if (m == QuartileMethod::Interpolated) {
        q.q1 = rank_interpolate(v, 0.25);
        q.q2 = rank_interpolate(v, 0.50);
        q.q3 = rank_interpolate(v, 0.75);
        return q;
    }
    // Median of the lower / upper halves; the 2n values always split evenly.
    std::size_t half = v.size() / 2;
    q.q2 = median_of(v, 0, v.size());
    q.q1 = median_of(v, 0, half);
    q.q3 = median_of(v, v.size() - half, half);
    return q;
}

// Width at agreement level k out of n, exact in the integer count domain.
double alpha_length_at_count(const MembershipCurve& c, const std::vector<long long>& counts,
                             long long k) {
    double len = 0.0;
    for (std::size_t i = 0; i < c.regions.size(); ++i)
        if (counts[i] >= k) len += c.regions[i].width();
    return len;
}

}  // namespace

double area(const MembershipCurve& c) {
    require_regions(c);
    double a = 0.0;
    for (const auto& r : c.regions) a += r.height * r.width();
    return a;
}

double perimeter(const MembershipCurve& c, PerimeterMode mode) {
    require_regions(c);
    double p = 0.0;
    double previous = 0.0;
    const std::size_t last = c.regions.size() - 1;
    for (std::size_t i = 0; i < c.regions.size(); ++i) {
        const Region& r = c.regions[i];
        if (mode == PerimeterMode::Literal && i == last) {
            p += r.height;
            return p;
        }
        if (r.is_spike()) {
            p += std::abs(r.height - std::max(previous, r.height));
        } else {
            p += r.width();  // bottom edge
            if (r.height > 0.0) {
                p += r.width();                        // top edge
                p += std::abs(previous - r.height);    // connecting left edge
            }
        }
        previous = r.height;
    }
    return p + c.regions[last].height;  // closing edge
}

double centroid_x(const MembershipCurve& c) {
    require_regions(c);
    double num = 0.0, den = 0.0;
    for (const auto& r : c.regions) {
        num += r.height * r.left + r.height * r.right;
        den += 2.0 * r.height;
    }
    if (den == 0.0) throw ValidationError("centroid of an all-zero curve");
    return num / den;
}

double centroid_y(const MembershipCurve& c) {
    require_regions(c);
    double sum = 0.0;
    std::size_t positive = 0;
    for (const auto& r : c.regions) {
        if (r.height > 0.0) {
            sum += r.height / 2.0;
            ++positive;
        }
    }
    if (positive == 0) throw ValidationError("centroid of an all-zero curve");
    return sum / static_cast<double>(positive);
}

FiveNumberSummary quartiles(const IntervalSet& s, QuartileMethod m) {
    if (s.intervals.empty()) throw ValidationError("quartiles of an empty set");
    std::vector<double> values;
    values.reserve(2 * s.size());
    for (const auto& iv : s.intervals) {
        values.push_back(iv.left);
        values.push_back(iv.right);
    }
    std::sort(values.begin(), values.end());
    return summary_of_sorted(values, m);
}

FiveNumberSummary quartiles_from_curve(const MembershipCurve& c, QuartileMethod m) {
    require_regions(c);
    const auto counts = region_counts(c);

    // Reconstruct the endpoint multiset from the points of change. At each
    // boundary b the membership exceeds the adjacent run heights by the
    // number of endpoints landing there: (left starts) = count(b) - left run,
    // (right ends) = count(b) - right run.
    std::vector<double> boundaries;
    for (const auto& r : c.regions) {
        boundaries.push_back(r.left);
        boundaries.push_back(r.right);
    }
    std::sort(boundaries.begin(), boundaries.end());
    boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());

    std::vector<double> values;
    values.reserve(2 * c.n);
    for (double b : boundaries) {
        long long left_run = 0, right_run = 0, point = 0;
        bool spiked = false;
        for (std::size_t i = 0; i < c.regions.size(); ++i) {
            const Region& r = c.regions[i];
            if (r.is_spike()) {
                if (r.left == b) {
                    point = counts[i];
                    spiked = true;
                }
            } else {
                if (r.right == b) left_run = counts[i];
                if (r.left == b) right_run = counts[i];
            }
        }
        if (!spiked) point = std::max(left_run, right_run);
        for (long long k = 0; k < point - right_run; ++k) values.push_back(b);  // ends
        for (long long k = 0; k < point - left_run; ++k) values.push_back(b);   // starts
    }
    if (values.size() != 2 * c.n)
        throw ValidationError("curve is not canonical: endpoint recovery failed");
    std::sort(values.begin(), values.end());
    return summary_of_sorted(values, m);
}

double alpha_length(const MembershipCurve& c, double a) {
    require_regions(c);
    double len = 0.0;
    for (const auto& r : c.regions)
        if (r.height >= a) len += r.width();
    return len;
}

double agreement_ratio(const MembershipCurve& c, AgreementLoop loop) {
    require_regions(c);
    if (c.n == 1) return 1.0;
    const auto counts = region_counts(c);
    const double n = static_cast<double>(c.n);
    const long long lowest = loop == AgreementLoop::DownToTwo ? 2 : 1;

    double total = 0.0, weights = 0.0;
    for (long long i = static_cast<long long>(c.n); i >= lowest; --i) {
        double denom = alpha_length_at_count(c, counts, i - 1);
        if (denom == 0.0) continue;
        double level = static_cast<double>(i) / n;
        total += level * (alpha_length_at_count(c, counts, i) / denom);
        weights += level;
    }
    return weights > 0.0 ? total / weights : 0.0;
}

AttributeSummary summarize(const IntervalSet& s, const MembershipCurve& c,
                           const AttributeOptions& opt) {
    AttributeSummary a;
    a.label = s.label;
    a.area = area(c);
    a.perimeter = perimeter(c, opt.perimeter);
    a.centroid_x = centroid_x(c);
    a.centroid_y = centroid_y(c);
    a.height = curve_height(c);
    a.agreement = agreement_ratio(c, opt.agreement);
    a.quartiles = quartiles(s, opt.quartiles);
    return a;
}

AttributeSummary summarize(const IntervalSet& s, const AttributeOptions& opt) {
    return summarize(s, build_curve(s), opt);
}

const char* to_string(PerimeterMode m) {
    return m == PerimeterMode::Closed ? "closed" : "literal";
}
const char* to_string(QuartileMethod m) {
    return m == QuartileMethod::Halves ? "halves" : "interp";
}
const char* to_string(AgreementLoop l) {
    return l == AgreementLoop::DownToTwo ? "to2" : "to1";
}

}  // namespace iaa
