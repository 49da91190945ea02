#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace iaa {

/// Closed interval [left, right]. Both endpoints belong to the interval;
/// left == right is a valid single-point ("crisp") response.
struct Interval {
    double left = 0.0;
    double right = 0.0;

    Interval() = default;
    Interval(double l, double r);

    bool contains(double x) const { return left <= x && x <= right; }
    double width() const { return right - left; }
    bool is_crisp() const { return left == right; }

    bool operator==(const Interval&) const = default;
};

/// A labelled collection of intervals describing one item. Duplicates are
/// allowed and meaningful (each interval is one source's response); order is
/// preserved as read but never affects a computed result.
struct IntervalSet {
    std::string label;
    std::vector<Interval> intervals;

    IntervalSet() = default;
    IntervalSet(std::string label, std::vector<Interval> intervals);

    std::size_t size() const { return intervals.size(); }

    bool operator==(const IntervalSet&) const = default;
};

/// Rectangular survey: one row per item, one column per source, every cell an
/// interval.
struct IntervalDataset {
    std::vector<std::string> item_labels;
    std::vector<std::string> source_labels;
    std::vector<std::vector<Interval>> cells;  // cells[item][source]

    std::size_t item_count() const { return item_labels.size(); }
    std::size_t source_count() const { return source_labels.size(); }

    /// All responses for one item as a set (label = item label).
    IntervalSet row_set(std::size_t item) const;

    /// All sets, one per item.
    std::vector<IntervalSet> row_sets() const;

    /// Swap the roles of items and sources.
    IntervalDataset transpose() const;

    void validate() const;

    bool operator==(const IntervalDataset&) const = default;
};

}  // namespace iaa
