#pragma once

#include <iosfwd>
#include <string>

#include "iaa/interval.hpp"

namespace iaa {

/// Parse one interval cell. Accepted forms: "[l,r]", "l:r" and a bare number
/// "v" (short for [v,v]). Whitespace around tokens is ignored.
Interval parse_interval(const std::string& text);

/// Render an interval in the "l:r" cell form ("v" when crisp). Numbers are
/// printed with the shortest representation that round-trips.
std::string format_interval(const Interval& iv);

/// Grid CSV: first row holds source labels, first column item labels. When a
/// file carries no header row/column (every candidate label parses as an
/// interval) labels "item_k" / "source_k" are generated.
IntervalDataset load_dataset_csv(const std::string& path);
IntervalDataset read_dataset_csv(std::istream& in, const std::string& origin = "csv");
void save_dataset_csv(const IntervalDataset& d, const std::string& path);
std::string dataset_to_csv(const IntervalDataset& d);

/// JSON form:
///   {"items":[{"label":"...","intervals":[[l,r],...]},...],"sources":[...]}
IntervalDataset load_dataset_json(const std::string& path);
IntervalDataset parse_dataset_json(const std::string& text, const std::string& origin = "json");
void save_dataset_json(const IntervalDataset& d, const std::string& path);
std::string dataset_to_json(const IntervalDataset& d);

/// Dispatch on file extension (".json" -> JSON, everything else CSV).
IntervalDataset load_dataset(const std::string& path);

std::string format_double(double v);  // shortest round-trip form

}  // namespace iaa
