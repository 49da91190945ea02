#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "iaa/attributes.hpp"
#include "iaa/film_study.hpp"
#include "support.hpp"

using namespace iaa;

namespace {

const IntervalSet kFig{"fig", {{1, 2}, {3, 4}, {3, 6}, {4, 4}}};

/// Midpoint-rule integral of the raw membership on a uniform grid refined at
/// the set's endpoints, so every cell is constant. Independent of area().
double integrate_membership(const IntervalSet& s, std::size_t cells) {
    double lo = s.intervals[0].left, hi = s.intervals[0].right;
    for (const auto& iv : s.intervals) {
        lo = std::min(lo, iv.left);
        hi = std::max(hi, iv.right);
    }
    if (lo == hi) return 0.0;
    std::vector<double> cuts;
    cuts.reserve(cells + 2 * s.size() + 1);
    const double step = (hi - lo) / static_cast<double>(cells);
    for (std::size_t k = 0; k <= cells; ++k) cuts.push_back(lo + step * static_cast<double>(k));
    for (const auto& iv : s.intervals) {
        cuts.push_back(iv.left);
        cuts.push_back(iv.right);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        if (b > a) total += membership_at(s, (a + b) / 2) * (b - a);
    }
    return total;
}

IntervalSet mirrored(const IntervalSet& s, double axis) {
    IntervalSet out;
    out.label = s.label;
    for (const auto& iv : s.intervals) out.intervals.emplace_back(2 * axis - iv.right, 2 * axis - iv.left);
    return out;
}

IntervalSet overlapping_set(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> count(1, 8);
    std::uniform_real_distribution<double> lo(0, 5), hi(5, 10);
    std::vector<Interval> iv;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) iv.emplace_back(lo(rng), hi(rng));
    return IntervalSet{"overlap", std::move(iv)};
}

}  // namespace

TEST_CASE("agreement ratio worked values") {
    const auto touching = build_curve({"t", {{1, 2}, {2, 3}}});
    CHECK(agreement_ratio(touching) == 0.0);
    CHECK(agreement_ratio(touching, AgreementLoop::DownToOne) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const auto overlapping = build_curve({"o", {{1, 2}, {1.9, 3}}});
    CHECK(agreement_ratio(overlapping) == doctest::Approx(0.05).epsilon(1e-12));

    CHECK(agreement_ratio(build_curve({"single", {{2, 7}}})) == 1.0);
    CHECK(agreement_ratio(build_curve({"single", {{2, 7}}}), AgreementLoop::DownToOne) == 1.0);
    CHECK(agreement_ratio(build_curve({"crisp", {{1, 1}, {2, 2}, {5, 5}}})) == 0.0);
}

TEST_CASE("perimeter walk pinned examples") {
    const auto fig = build_curve(kFig);
    CHECK(perimeter(fig, PerimeterMode::Closed) == doctest::Approx(10.5).epsilon(1e-12));
    CHECK(perimeter(fig, PerimeterMode::Literal) == doctest::Approx(6.0).epsilon(1e-12));

    const auto touching = build_curve({"t", {{1, 2}, {2, 3}}});
    CHECK(perimeter(touching, PerimeterMode::Closed) == doctest::Approx(5.5).epsilon(1e-12));
    CHECK(perimeter(touching, PerimeterMode::Literal) == doctest::Approx(3.0).epsilon(1e-12));

    const auto square = build_curve({"sq", {{0, 1}}});
    CHECK(perimeter(square, PerimeterMode::Closed) == 4.0);
    CHECK(perimeter(square, PerimeterMode::Literal) == 1.0);
}

TEST_CASE("perimeter is positive and at least the curve height") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const auto c = build_curve(testsupport::random_set(rng));
        CHECK(perimeter(c, PerimeterMode::Closed) >= curve_height(c) - 1e-12);
        CHECK(perimeter(c, PerimeterMode::Closed) > 0.0);
        CHECK(perimeter(c, PerimeterMode::Literal) > 0.0);
    }
}

TEST_CASE("area equals mean interval width") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = testsupport::random_set(rng);
        double widths = 0.0;
        for (const auto& iv : s.intervals) widths += iv.width();
        CHECK(area(build_curve(s)) ==
              doctest::Approx(widths / static_cast<double>(s.size())).epsilon(1e-12));
    }
}

TEST_CASE("area matches numeric integration of the membership") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        const auto s = testsupport::random_set(rng);
        const auto c = build_curve(s);
        const auto [lo, hi] = support_bounds(c);
        const double span = hi - lo;
        const double tolerance = std::max(1e-6 * span, 1e-12);
        CHECK(std::abs(area(c) - integrate_membership(s, 100000)) <= tolerance);
    }
}

TEST_CASE("centroid pinned example and bounds") {
    const auto fig = build_curve(kFig);
    CHECK(centroid_x(fig) == doctest::Approx(3.642857142857143).epsilon(1e-12));
    CHECK(centroid_y(fig) == doctest::Approx(0.21875).epsilon(1e-12));

    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 300; ++trial) {
        const auto c = build_curve(testsupport::random_set(rng));
        const auto [lo, hi] = support_bounds(c);
        const double cx = centroid_x(c);
        CHECK(cx >= lo);
        CHECK(cx <= hi);
        const double cy = centroid_y(c);
        CHECK(cy > 0.0);
        CHECK(cy <= 0.5);
    }
}

TEST_CASE("quartiles of the endpoint multiset") {
    IntervalSet b{"B", {{5, 6}, {6, 7}, {10, 10}, {3, 4}, {5, 5}}};
    const auto halves = quartiles(b);
    CHECK(halves.min == 3.0);
    CHECK(halves.q1 == 5.0);
    CHECK(halves.q2 == 5.5);
    CHECK(halves.q3 == 7.0);
    CHECK(halves.max == 10.0);

    const auto interp = quartiles(b, QuartileMethod::Interpolated);
    CHECK(interp.q1 == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(interp.q2 == doctest::Approx(5.5).epsilon(1e-12));
    CHECK(interp.q3 == doctest::Approx(6.75).epsilon(1e-12));

    // two intervals: quartiles of {1,2,3,4}
    IntervalSet two{"two", {{1, 3}, {2, 4}}};
    const auto h2 = quartiles(two);
    CHECK(h2.q1 == 1.5);
    CHECK(h2.q2 == 2.5);
    CHECK(h2.q3 == 3.5);
}

TEST_CASE("quartiles are monotone and recoverable from the curve") {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = testsupport::random_set(rng);
        const auto c = build_curve(s);
        for (auto m : {QuartileMethod::Halves, QuartileMethod::Interpolated}) {
            const auto q = quartiles(s, m);
            CHECK(q.min <= q.q1);
            CHECK(q.q1 <= q.q2);
            CHECK(q.q2 <= q.q3);
            CHECK(q.q3 <= q.max);
            const auto r = quartiles_from_curve(c, m);
            CHECK(r.values() == q.values());
        }
    }
}

TEST_CASE("alpha length pinned values and monotonicity") {
    const auto fig = build_curve(kFig);
    CHECK(alpha_length(fig, 0.0) == 5.0);
    CHECK(alpha_length(fig, 0.25) == 4.0);
    CHECK(alpha_length(fig, 0.5) == 1.0);
    CHECK(alpha_length(fig, 0.75) == 0.0);  // only the spike reaches 0.75
    CHECK(alpha_length(fig, 1.0) == 0.0);

    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> level(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = build_curve(testsupport::random_set(rng));
        const auto [lo, hi] = support_bounds(c);
        CHECK(alpha_length(c, 0.0) == doctest::Approx(hi - lo).epsilon(1e-12));
        double a = level(rng), b = level(rng);
        if (a > b) std::swap(a, b);
        CHECK(alpha_length(c, a) >= alpha_length(c, b));
    }
}

TEST_CASE("agreement ratio stays in range and ignores scale") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = testsupport::random_set(rng);
        const auto c = build_curve(s);
        for (auto loop : {AgreementLoop::DownToTwo, AgreementLoop::DownToOne}) {
            const double r = agreement_ratio(c, loop);
            CHECK(r >= 0.0);
            CHECK(r <= 1.0);

            IntervalSet scaled;
            scaled.label = s.label;
            for (const auto& iv : s.intervals)
                scaled.intervals.emplace_back(3.0 * iv.left, 3.0 * iv.right);
            CHECK(agreement_ratio(build_curve(scaled), loop) == doctest::Approx(r).epsilon(1e-9));
        }
    }
}

TEST_CASE("reflection flips centroid-x and keeps the x-free attributes") {
    std::mt19937_64 rng(38);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = testsupport::random_set(rng);
        const auto c = build_curve(s);
        const auto m = build_curve(mirrored(s, 5.0));

        CHECK(centroid_x(m) == doctest::Approx(10.0 - centroid_x(c)).epsilon(1e-9));
        CHECK(centroid_y(m) == doctest::Approx(centroid_y(c)).epsilon(1e-12));
        CHECK(area(m) == doctest::Approx(area(c)).epsilon(1e-12));
        CHECK(agreement_ratio(m) == doctest::Approx(agreement_ratio(c)).epsilon(1e-12));

        const auto q = quartiles(s), qm = quartiles(mirrored(s, 5.0));
        CHECK(qm.max - qm.min == doctest::Approx(q.max - q.min).epsilon(1e-9));
        CHECK(qm.q3 - qm.q1 == doctest::Approx(q.q3 - q.q1).epsilon(1e-9));
        CHECK(qm.q2 == doctest::Approx(10.0 - q.q2).epsilon(1e-9));
    }
}

TEST_CASE("reflection keeps the closed perimeter of connected curves") {
    // The edge walk is direction-sensitive at interior zero-height gaps and at
    // spikes with unequal neighbours; fully overlapping sets have neither.
    std::mt19937_64 rng(39);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = overlapping_set(rng);
        const double p = perimeter(build_curve(s), PerimeterMode::Closed);
        const double q = perimeter(build_curve(mirrored(s, 5.0)), PerimeterMode::Closed);
        CHECK(p == doctest::Approx(q).epsilon(1e-9));
    }
}

TEST_CASE("duplicating the whole set keeps every curve attribute") {
    std::mt19937_64 rng(40);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = testsupport::random_set(rng);
        IntervalSet doubled = s;
        doubled.intervals.insert(doubled.intervals.end(), s.intervals.begin(), s.intervals.end());
        const auto c = build_curve(s), d = build_curve(doubled);
        CHECK(c.regions == d.regions);
        CHECK(area(d) == area(c));
        CHECK(perimeter(d) == perimeter(c));
        CHECK(centroid_x(d) == centroid_x(c));
        CHECK(centroid_y(d) == centroid_y(c));
        // Doubling the endpoint multiset keeps every halves quartile, but the
        // interpolated method indexes by sample size, so only the extremes and
        // the median survive there.
        CHECK(quartiles(doubled, QuartileMethod::Halves).values() ==
              quartiles(s, QuartileMethod::Halves).values());
        const auto qi = quartiles(s, QuartileMethod::Interpolated);
        const auto qd = quartiles(doubled, QuartileMethod::Interpolated);
        CHECK(qd.min == qi.min);
        CHECK(qd.q2 == doctest::Approx(qi.q2).epsilon(1e-12));
        CHECK(qd.max == qi.max);
    }
}

TEST_CASE("summarize is deterministic and order-invariant") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = testsupport::random_set(rng);
        const auto a = summarize(s);
        const auto b = summarize(testsupport::shuffled(s, rng));
        CHECK(a.area == b.area);
        CHECK(a.perimeter == b.perimeter);
        CHECK(a.centroid_x == b.centroid_x);
        CHECK(a.centroid_y == b.centroid_y);
        CHECK(a.height == b.height);
        CHECK(a.agreement == b.agreement);
        CHECK(a.quartiles.values() == b.quartiles.values());
    }
}

TEST_CASE("summarize agrees with the standalone attribute functions") {
    std::mt19937_64 rng(42);
    const auto s = testsupport::random_set(rng);
    const auto c = build_curve(s);
    AttributeOptions opt;
    opt.perimeter = PerimeterMode::Literal;
    opt.quartiles = QuartileMethod::Interpolated;
    opt.agreement = AgreementLoop::DownToOne;
    const auto a = summarize(s, opt);
    CHECK(a.area == area(c));
    CHECK(a.perimeter == perimeter(c, PerimeterMode::Literal));
    CHECK(a.centroid_x == centroid_x(c));
    CHECK(a.centroid_y == centroid_y(c));
    CHECK(a.height == curve_height(c));
    CHECK(a.agreement == agreement_ratio(c, AgreementLoop::DownToOne));
    CHECK(a.quartiles.values() == quartiles(s, QuartileMethod::Interpolated).values());
}

TEST_CASE("film survey spot values") {
    const auto sets = film_dataset().row_sets();
    const auto a = summarize(sets[0]);  // five identical crisp scores of 1
    CHECK(a.area == 0.0);
    CHECK(a.perimeter == 1.0);
    CHECK(a.centroid_x == 1.0);
    CHECK(a.centroid_y == 0.5);
    CHECK(a.height == 1.0);
    CHECK(a.agreement == 0.0);
    CHECK(a.quartiles.values() == std::array<double, 5>{1, 1, 1, 1, 1});

    const auto b = summarize(sets[1]);
    CHECK(b.area == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(b.agreement == 0.0);  // no two scores overlap on a run
    CHECK(b.quartiles.values() == std::array<double, 5>{3, 5, 5.5, 7, 10});

    const auto g = summarize(sets[6]);
    CHECK(g.agreement == doctest::Approx(0.2).epsilon(1e-12));
}
