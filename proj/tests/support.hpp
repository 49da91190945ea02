#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "iaa/interval.hpp"

namespace testsupport {

struct SetGen {
    std::size_t min_intervals = 1;
    std::size_t max_intervals = 12;
    double lo = 0.0;
    double hi = 10.0;
    double crisp_probability = 0.2;
};

inline iaa::IntervalSet random_set(std::mt19937_64& rng, const SetGen& g = {}) {
    std::uniform_int_distribution<std::size_t> count(g.min_intervals, g.max_intervals);
    std::uniform_real_distribution<double> value(g.lo, g.hi);
    std::bernoulli_distribution crisp(g.crisp_probability);
    std::vector<iaa::Interval> intervals;
    const std::size_t n = count(rng);
    intervals.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = value(rng);
        if (crisp(rng)) {
            intervals.emplace_back(a, a);
        } else {
            const double b = value(rng);
            intervals.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    return {"random", std::move(intervals)};
}

inline iaa::IntervalSet shuffled(const iaa::IntervalSet& s, std::mt19937_64& rng) {
    iaa::IntervalSet out = s;
    std::shuffle(out.intervals.begin(), out.intervals.end(), rng);
    return out;
}

/// Every interval's endpoints, one draw position at a time (spikes live here).
inline double random_endpoint(const iaa::IntervalSet& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, s.size() * 2 - 1);
    const std::size_t k = pick(rng);
    const auto& iv = s.intervals[k / 2];
    return (k % 2) ? iv.right : iv.left;
}

}  // namespace testsupport
