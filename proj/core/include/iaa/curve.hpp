#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "iaa/interval.hpp"

namespace iaa {

/// One piece of a piecewise-constant membership curve. Positive-width regions
/// carry their height over the open interior; zero-width regions ("spikes")
/// carry the point membership at a single coordinate.
struct Region {
    double left = 0.0;
    double right = 0.0;
    double height = 0.0;

    double width() const { return right - left; }
    bool is_spike() const { return left == right; }

    bool operator==(const Region&) const = default;
};

/// Canonical piecewise-constant membership curve built from n intervals.
///
/// Canonical form: regions sorted by (left, right); they tile the support
/// [min left endpoint, max right endpoint] with zero-height regions filling
/// coverage gaps; maximal runs of equal height are merged; a spike appears
/// exactly where the point membership differs from both neighbouring region
/// heights. Every height is an exact multiple of 1/n.
struct MembershipCurve {
    std::string label;
    std::size_t n = 0;  // number of source intervals
    std::vector<Region> regions;

    bool operator==(const MembershipCurve&) const = default;
};

/// Fraction of the set's intervals containing x (exact integer count / n).
double membership_at(const IntervalSet& s, double x);

/// Build the canonical curve for a non-empty set.
MembershipCurve build_curve(const IntervalSet& s);

/// Evaluate the curve at x: spike height if x is a spike coordinate, else the
/// height of the containing region (the taller one on a shared boundary),
/// 0 outside the support. Agrees exactly with membership_at on the source set.
double height_at(const MembershipCurve& c, double x);

/// Maximum region height (the curve's "agreement level" top).
double curve_height(const MembershipCurve& c);

/// Leftmost and rightmost supported coordinate.
std::pair<double, double> support_bounds(const MembershipCurve& c);

/// Region heights as exact integer counts (height * n).
std::vector<long long> region_counts(const MembershipCurve& c);

/// JSON form: {"label":"...","n":N,"regions":[[left,right,height],...]}
std::string curve_to_json(const MembershipCurve& c);
MembershipCurve parse_curve_json(const std::string& text);
void save_curves_json(const std::vector<MembershipCurve>& curves, const std::string& path);
std::vector<MembershipCurve> load_curves_json(const std::string& path);

}  // namespace iaa
