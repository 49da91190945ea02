#pragma once

#include <array>
#include <string>

#include "iaa/curve.hpp"
#include "iaa/interval.hpp"

namespace iaa {

/// Final-region treatment in the perimeter walk.
///   Closed  - every region is processed by the general rules, then the figure
///             is closed with one extra edge of the final region's height
///             (default; a unit square measures 4).
///   Literal - the final region contributes only its height and nothing else.
enum class PerimeterMode { Closed, Literal };

/// Quartile convention over the 2n endpoint values.
///   Halves       - median of the lower / upper n values (default).
///   Interpolated - linear interpolation between closest ranks.
enum class QuartileMethod { Halves, Interpolated };

/// Lower bound of the agreement-ratio level loop.
///   DownToTwo - levels i = n..2 (default): every term compares two
///               positive agreement levels.
///   DownToOne - levels i = n..1: adds the base term against the full span.
enum class AgreementLoop { DownToTwo, DownToOne };

struct AttributeOptions {
    PerimeterMode perimeter = PerimeterMode::Closed;
    QuartileMethod quartiles = QuartileMethod::Halves;
    AgreementLoop agreement = AgreementLoop::DownToTwo;

    bool operator==(const AttributeOptions&) const = default;
};

struct FiveNumberSummary {
    double min = 0, q1 = 0, q2 = 0, q3 = 0, max = 0;

    std::array<double, 5> values() const { return {min, q1, q2, q3, max}; }
    bool operator==(const FiveNumberSummary&) const = default;
};

/// Scalar profile of one item; the inputs of the similarity measure.
struct AttributeSummary {
    std::string label;
    double area = 0;
    double perimeter = 0;
    double centroid_x = 0;
    double centroid_y = 0;
    double height = 0;
    double agreement = 0;
    FiveNumberSummary quartiles;
};

/// Sum of height * width over the regions.
double area(const MembershipCurve& c);

/// Edge-walk perimeter. Walks the region list left to right keeping the
/// previous region's height (0 before the first): a positive-width region
/// adds its bottom edge and, when its height is positive, its top edge plus
/// the connecting edge |previous - height|; a spike adds
/// |height - max(previous, height)| (0 unless shorter than its left
/// neighbour); zero-height regions add width only and drop previous to 0.
/// Every region updates previous, spikes included. The mode decides what the
/// final region contributes.
double perimeter(const MembershipCurve& c, PerimeterMode mode = PerimeterMode::Closed);

/// Height-weighted mean of region edges: sum h*(l+r) / sum 2h.
double centroid_x(const MembershipCurve& c);

/// Mean of height/2 over regions with positive height.
double centroid_y(const MembershipCurve& c);

/// Five-number summary of the 2n endpoint values of the set.
FiveNumberSummary quartiles(const IntervalSet& s, QuartileMethod m = QuartileMethod::Halves);

/// Same summary recovered from a canonical curve alone: the endpoint multiset
/// is reconstructed from the membership deltas at the points of change.
/// Agrees with quartiles(s, m) for c = build_curve(s).
FiveNumberSummary quartiles_from_curve(const MembershipCurve& c,
                                       QuartileMethod m = QuartileMethod::Halves);

/// Total width of the regions with height >= a. At a = 0 this is the full
/// support span (zero-height gap widths included); spikes never add width.
double alpha_length(const MembershipCurve& c, double a);

/// Level-weighted mean of consecutive alpha-length ratios. Levels run from
/// i = n down to the loop bound; a level whose denominator alpha-length is 0
/// is skipped. A single-interval set scores 1; if every level is skipped
/// (all-crisp set) the ratio is 0.
double agreement_ratio(const MembershipCurve& c, AgreementLoop loop = AgreementLoop::DownToTwo);

/// All attributes of one item in one pass.
AttributeSummary summarize(const IntervalSet& s, const MembershipCurve& c,
                           const AttributeOptions& opt = {});
AttributeSummary summarize(const IntervalSet& s, const AttributeOptions& opt = {});

const char* to_string(PerimeterMode m);
const char* to_string(QuartileMethod m);
const char* to_string(AgreementLoop l);

}  // namespace iaa
