#include "iaa/interval.hpp"

#include <cmath>
#include <utility>

#include "iaa/errors.hpp"

namespace iaa {

Interval::Interval(double l, double r) : left(l), right(r) {
    if (!std::isfinite(l) || !std::isfinite(r))
        throw ValidationError("interval endpoints must be finite");
    if (l > r)
        throw ValidationError("interval left endpoint exceeds right endpoint");
}

IntervalSet::IntervalSet(std::string label_, std::vector<Interval> intervals_)
    : label(std::move(label_)), intervals(std::move(intervals_)) {
    if (intervals.empty())
        throw ValidationError("interval set '" + label + "' is empty");
}

IntervalSet IntervalDataset::row_set(std::size_t item) const {
    return IntervalSet(item_labels.at(item), cells.at(item));
}

std::vector<IntervalSet> IntervalDataset::row_sets() const {
    std::vector<IntervalSet> out;
    out.reserve(item_count());
    for (std::size_t i = 0; i < item_count(); ++i) out.push_back(row_set(i));
    return out;
}

IntervalDataset IntervalDataset::transpose() const {
    IntervalDataset t;
    t.item_labels = source_labels;
    t.source_labels = item_labels;
    t.cells.assign(source_count(), std::vector<Interval>(item_count()));
    for (std::size_t i = 0; i < item_count(); ++i)
        for (std::size_t j = 0; j < source_count(); ++j) t.cells[j][i] = cells[i][j];
    return t;
}

void IntervalDataset::validate() const {
    if (item_labels.empty() || source_labels.empty())
        throw ValidationError("dataset needs at least one item and one source");
    if (cells.size() != item_labels.size())
        throw ValidationError("dataset row count does not match item labels");
    for (const auto& row : cells)
        if (row.size() != source_labels.size())
            throw ValidationError("dataset has a ragged row");
}

}  // namespace iaa
