#include "iaa/curve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "iaa/dataset_io.hpp"
#include "iaa/errors.hpp"

namespace iaa {
namespace {

long long count_containing(const IntervalSet& s, double x) {
    long long c = 0;
    for (const auto& iv : s.intervals) c += iv.contains(x) ? 1 : 0;
    return c;
}

// Intervals never end strictly inside an open gap between adjacent
// breakpoints, so covering both gap endpoints is covering the whole gap.
long long count_covering(const IntervalSet& s, double lo, double hi) {
    long long c = 0;
    for (const auto& iv : s.intervals) c += (iv.left <= lo && hi <= iv.right) ? 1 : 0;
    return c;
}

}  // namespace

double membership_at(const IntervalSet& s, double x) {
    if (s.intervals.empty()) throw ValidationError("membership of an empty set");
    return static_cast<double>(count_containing(s, x)) / static_cast<double>(s.size());
}

MembershipCurve build_curve(const IntervalSet& s) {
    if (s.intervals.empty()) throw ValidationError("cannot build a curve from an empty set");
    const double n = static_cast<double>(s.size());

    std::vector<double> bps;
    bps.reserve(2 * s.size());
    for (const auto& iv : s.intervals) {
        bps.push_back(iv.left);
        bps.push_back(iv.right);
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    const std::size_t m = bps.size();
    std::vector<long long> seg(m > 0 ? m - 1 : 0);  // count over (bps[j], bps[j+1])
    for (std::size_t j = 0; j + 1 < m; ++j) seg[j] = count_covering(s, bps[j], bps[j + 1]);

    MembershipCurve c;
    c.label = s.label;
    c.n = s.size();

    // A breakpoint is absorbed into a neighbouring run when its point count
    // matches that side; otherwise it stands alone as a spike.
    std::vector<Region> raw;
    for (std::size_t j = 0; j < m; ++j) {
        long long point = count_containing(s, bps[j]);
        bool matches_left = j > 0 && seg[j - 1] == point;
        bool matches_right = j + 1 < m && seg[j] == point;
        if (!matches_left && !matches_right)
            raw.push_back({bps[j], bps[j], static_cast<double>(point) / n});
        if (j + 1 < m) raw.push_back({bps[j], bps[j + 1], static_cast<double>(seg[j]) / n});
    }

    // Merge maximal runs: adjacent positive-width regions of equal height with
    // no spike between them collapse into one.
    for (const auto& r : raw) {
        if (!c.regions.empty()) {
            Region& prev = c.regions.back();
            if (!prev.is_spike() && !r.is_spike() && prev.right == r.left &&
                prev.height == r.height) {
                prev.right = r.right;
                continue;
            }
        }
        c.regions.push_back(r);
    }
    return c;
}

double height_at(const MembershipCurve& c, double x) {
    if (c.regions.empty()) throw ValidationError("empty curve");
    if (x < c.regions.front().left || x > c.regions.back().right) return 0.0;
    double best = 0.0;
    for (const auto& r : c.regions) {
        if (r.left > x) break;
        if (x > r.right) continue;
        if (r.is_spike()) return r.height;  // the point membership itself
        best = std::max(best, r.height);    // shared boundary: taller side owns it
    }
    return best;
}

double curve_height(const MembershipCurve& c) {
    if (c.regions.empty()) throw ValidationError("empty curve");
    double h = 0.0;
    for (const auto& r : c.regions) h = std::max(h, r.height);
    return h;
}

std::pair<double, double> support_bounds(const MembershipCurve& c) {
    if (c.regions.empty()) throw ValidationError("empty curve");
    return {c.regions.front().left, c.regions.back().right};
}

std::vector<long long> region_counts(const MembershipCurve& c) {
    std::vector<long long> counts;
    counts.reserve(c.regions.size());
    for (const auto& r : c.regions)
        counts.push_back(std::llround(r.height * static_cast<double>(c.n)));
    return counts;
}

std::string curve_to_json(const MembershipCurve& c) {
    nlohmann::json j;
    j["label"] = c.label;
    j["n"] = c.n;
    auto regions = nlohmann::json::array();
    for (const auto& r : c.regions) regions.push_back({r.left, r.right, r.height});
    j["regions"] = std::move(regions);
    return j.dump();
}

MembershipCurve parse_curve_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("curve json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("regions"))
        throw ParseError("curve json: expected {label, n, regions}");
    MembershipCurve c;
    c.label = j.value("label", "");
    c.n = j["n"].get<std::size_t>();
    for (const auto& r : j["regions"]) {
        if (!r.is_array() || r.size() != 3)
            throw ParseError("curve json: regions must be [left,right,height] triples");
        c.regions.push_back({r[0].get<double>(), r[1].get<double>(), r[2].get<double>()});
    }
    return c;
}

void save_curves_json(const std::vector<MembershipCurve>& curves, const std::string& path) {
    nlohmann::json j;
    j["curves"] = nlohmann::json::array();
    for (const auto& c : curves) j["curves"].push_back(nlohmann::json::parse(curve_to_json(c)));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

std::vector<MembershipCurve> load_curves_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    std::vector<MembershipCurve> curves;
    if (j.is_object() && j.contains("curves")) {
        for (const auto& cj : j["curves"]) curves.push_back(parse_curve_json(cj.dump()));
    } else if (j.is_object()) {
        curves.push_back(parse_curve_json(buf.str()));
    } else {
        throw ParseError(path + ": expected a curve object or {\"curves\": [...]}");
    }
    return curves;
}

}  // namespace iaa
