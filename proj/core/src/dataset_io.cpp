#include "iaa/dataset_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "iaa/errors.hpp"

namespace iaa {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw ParseError("empty number");
    const char* begin = t.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + t.size()) throw ParseError("bad number '" + t + "'");
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

// Minimal RFC-style CSV: quoted fields may hold commas/newlines, "" escapes.
std::vector<std::vector<std::string>> parse_csv(const std::string& text, const std::string& origin) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;
    std::size_t line = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') { field += '"'; ++i; }
                else quoted = false;
            } else field += ch;
            if (ch == '\n') ++line;
        } else if (ch == '"') {
            quoted = true; any = true;
        } else if (ch == ',') {
            row.push_back(field); field.clear(); any = true;
        } else if (ch == '\n' || ch == '\r') {
            if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            ++line;
            if (any || !field.empty()) { row.push_back(field); rows.push_back(row); }
            row.clear(); field.clear(); any = false;
        } else {
            field += ch; any = true;
        }
    }
    if (quoted) throw ParseError(origin + ": unterminated quote at line " + std::to_string(line));
    if (any || !field.empty()) { row.push_back(field); rows.push_back(row); }
    return rows;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) { if (c == '"') out += '"'; out += c; }
    out += '"';
    return out;
}

bool looks_like_interval(const std::string& text) {
    try { parse_interval(text); return true; } catch (const ParseError&) { return false; }
}

}  // namespace

Interval parse_interval(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw ParseError("blank cell");
    if (t.front() == '[') {
        if (t.back() != ']') throw ParseError("unclosed '[' in '" + t + "'");
        std::string inner = t.substr(1, t.size() - 2);
        auto comma = inner.find(',');
        if (comma == std::string::npos) throw ParseError("expected '[l,r]' in '" + t + "'");
        return Interval(parse_number(inner.substr(0, comma)), parse_number(inner.substr(comma + 1)));
    }
    if (auto colon = t.find(':'); colon != std::string::npos)
        return Interval(parse_number(t.substr(0, colon)), parse_number(t.substr(colon + 1)));
    double v = parse_number(t);
    return Interval(v, v);
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_interval(const Interval& iv) {
    if (iv.is_crisp()) return format_double(iv.left);
    return format_double(iv.left) + ":" + format_double(iv.right);
}

IntervalDataset read_dataset_csv(std::istream& in, const std::string& origin) {
    std::ostringstream buf;
    buf << in.rdbuf();
    auto rows = parse_csv(buf.str(), origin);
    if (rows.empty()) throw ParseError(origin + ": no rows");

    std::size_t width = rows.front().size();
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r].size() != width)
            throw ParseError(origin + ": row " + std::to_string(r + 1) + " has " +
                             std::to_string(rows[r].size()) + " cells, expected " +
                             std::to_string(width));

    // Header row/column detection: a label row is one that does not parse as
    // data. If every candidate parses as an interval the file is headerless
    // and labels are generated.
    bool has_header_row = false;
    for (std::size_t c = 1; c < width; ++c)
        if (!looks_like_interval(rows[0][c])) { has_header_row = true; break; }
    if (width == 1 && !looks_like_interval(rows[0][0])) has_header_row = true;

    std::size_t first_data_row = has_header_row ? 1 : 0;
    if (first_data_row >= rows.size()) throw ParseError(origin + ": no data rows");

    bool has_label_col = false;
    if (width > 1) {
        for (std::size_t r = first_data_row; r < rows.size(); ++r)
            if (!looks_like_interval(rows[r][0])) { has_label_col = true; break; }
    }
    std::size_t first_data_col = has_label_col ? 1 : 0;
    if (first_data_col >= width) throw ParseError(origin + ": no data columns");

    IntervalDataset d;
    for (std::size_t c = first_data_col; c < width; ++c) {
        if (has_header_row) d.source_labels.push_back(trim(rows[0][c]));
        else d.source_labels.push_back("source_" + std::to_string(c - first_data_col + 1));
    }
    for (std::size_t r = first_data_row; r < rows.size(); ++r) {
        if (has_label_col) d.item_labels.push_back(trim(rows[r][0]));
        else d.item_labels.push_back("item_" + std::to_string(r - first_data_row + 1));
        std::vector<Interval> row;
        for (std::size_t c = first_data_col; c < width; ++c) {
            try {
                row.push_back(parse_interval(rows[r][c]));
            } catch (const std::exception& e) {
                throw ParseError(origin + ": row " + std::to_string(r + 1) + ", column " +
                                 std::to_string(c + 1) + " ('" + d.item_labels.back() + "' / '" +
                                 d.source_labels[c - first_data_col] + "'): " + e.what());
            }
        }
        d.cells.push_back(std::move(row));
    }
    d.validate();
    return d;
}

IntervalDataset load_dataset_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_dataset_csv(in, path);
}

std::string dataset_to_csv(const IntervalDataset& d) {
    std::ostringstream out;
    out << "";
    for (const auto& s : d.source_labels) out << ',' << csv_escape(s);
    out << '\n';
    for (std::size_t i = 0; i < d.item_count(); ++i) {
        out << csv_escape(d.item_labels[i]);
        for (const auto& cell : d.cells[i]) out << ',' << csv_escape(format_interval(cell));
        out << '\n';
    }
    return out.str();
}

void save_dataset_csv(const IntervalDataset& d, const std::string& path) {
    write_file(path, dataset_to_csv(d));
}

IntervalDataset parse_dataset_json(const std::string& text, const std::string& origin) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("items") || !j["items"].is_array())
        throw ParseError(origin + ": expected an object with an 'items' array");

    IntervalDataset d;
    std::size_t source_count = 0;
    for (std::size_t i = 0; i < j["items"].size(); ++i) {
        const auto& item = j["items"][i];
        std::string label = item.value("label", "item_" + std::to_string(i + 1));
        if (!item.contains("intervals") || !item["intervals"].is_array() || item["intervals"].empty())
            throw ParseError(origin + ": item '" + label + "' has no intervals");
        std::vector<Interval> row;
        for (const auto& iv : item["intervals"]) {
            if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
                throw ParseError(origin + ": item '" + label + "': intervals must be [l,r] pairs");
            try {
                row.push_back(Interval(iv[0].get<double>(), iv[1].get<double>()));
            } catch (const ValidationError& e) {
                throw ParseError(origin + ": item '" + label + "': " + e.what());
            }
        }
        if (i == 0) source_count = row.size();
        else if (row.size() != source_count)
            throw ParseError(origin + ": item '" + label + "' has " + std::to_string(row.size()) +
                             " intervals, expected " + std::to_string(source_count));
        d.item_labels.push_back(std::move(label));
        d.cells.push_back(std::move(row));
    }
    if (j.contains("sources")) {
        if (!j["sources"].is_array() || j["sources"].size() != source_count)
            throw ParseError(origin + ": 'sources' must list one label per interval column");
        for (const auto& s : j["sources"]) d.source_labels.push_back(s.get<std::string>());
    } else {
        for (std::size_t c = 0; c < source_count; ++c)
            d.source_labels.push_back("source_" + std::to_string(c + 1));
    }
    d.validate();
    return d;
}

IntervalDataset load_dataset_json(const std::string& path) {
    return parse_dataset_json(read_file(path), path);
}

std::string dataset_to_json(const IntervalDataset& d) {
    nlohmann::json j;
    j["items"] = nlohmann::json::array();
    for (std::size_t i = 0; i < d.item_count(); ++i) {
        nlohmann::json item;
        item["label"] = d.item_labels[i];
        auto arr = nlohmann::json::array();
        for (const auto& iv : d.cells[i]) arr.push_back({iv.left, iv.right});
        item["intervals"] = std::move(arr);
        j["items"].push_back(std::move(item));
    }
    j["sources"] = d.source_labels;
    return j.dump(2) + "\n";
}

void save_dataset_json(const IntervalDataset& d, const std::string& path) {
    write_file(path, dataset_to_json(d));
}

IntervalDataset load_dataset(const std::string& path) {
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return load_dataset_json(path);
    return load_dataset_csv(path);
}

}  // namespace iaa
