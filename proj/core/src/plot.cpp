#include "iaa/plot.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "iaa/dataset_io.hpp"
#include "iaa/errors.hpp"

namespace iaa {
namespace {

constexpr double kMarginLeft = 48, kMarginRight = 16, kMarginTop = 20, kMarginBottom = 36;

struct Mapper {
    double x0, x1, px0, px1;
    double y_px0, y_px1;  // pixel rows for mu = 0 and mu = 1

    double x(double v) const {
        if (x1 == x0) return (px0 + px1) / 2.0;
        return px0 + (v - x0) / (x1 - x0) * (px1 - px0);
    }
    double y(double mu) const { return y_px0 + mu * (y_px1 - y_px0); }
};

std::string num(double v) { return format_double(v); }

void line(std::ostringstream& out, double x1, double y1, double x2, double y2,
          const char* style) {
    out << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
        << "\" y2=\"" << num(y2) << "\" " << style << "/>\n";
}

void text(std::ostringstream& out, double x, double y, const std::string& s,
          const char* anchor) {
    out << "  <text x=\"" << num(x) << "\" y=\"" << num(y) << "\" text-anchor=\"" << anchor
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << s << "</text>\n";
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string curve_to_svg(const MembershipCurve& c, const PlotOptions& opt) {
    if (c.regions.empty()) throw ValidationError("cannot plot an empty curve");
    auto [lo, hi] = support_bounds(c);
    double pad = hi > lo ? (hi - lo) * 0.05 : 1.0;

    Mapper map;
    map.x0 = lo - pad;
    map.x1 = hi + pad;
    map.px0 = kMarginLeft;
    map.px1 = opt.width - kMarginRight;
    map.y_px0 = opt.height - kMarginBottom;
    map.y_px1 = kMarginTop;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width
        << "\" height=\"" << opt.height << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height
        << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const char* axis_style = "stroke=\"#444\" stroke-width=\"1\"";
    line(out, map.px0, map.y(0), map.px1, map.y(0), axis_style);
    line(out, map.px0, map.y(0), map.px0, map.y(1) - 6, axis_style);

    const char* grid_style = "stroke=\"#ccc\" stroke-width=\"0.5\" stroke-dasharray=\"3,3\"";
    for (double mu : {0.25, 0.5, 0.75, 1.0}) {
        line(out, map.px0, map.y(mu), map.px1, map.y(mu), grid_style);
        text(out, map.px0 - 6, map.y(mu) + 4, num(mu), "end");
    }
    text(out, map.px0 - 6, map.y(0) + 4, "0", "end");

    std::vector<double> ticks;
    for (const auto& r : c.regions) {
        ticks.push_back(r.left);
        ticks.push_back(r.right);
    }
    std::sort(ticks.begin(), ticks.end());
    ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
    for (double t : ticks) {
        line(out, map.x(t), map.y(0), map.x(t), map.y(0) + 4, axis_style);
        text(out, map.x(t), map.y(0) + 16, num(t), "middle");
    }

    const char* curve_style = "stroke=\"#1a6fb4\" stroke-width=\"2\"";
    for (const auto& r : c.regions) {
        if (r.is_spike()) {
            line(out, map.x(r.left), map.y(0), map.x(r.left), map.y(r.height), curve_style);
            out << "  <circle cx=\"" << num(map.x(r.left)) << "\" cy=\"" << num(map.y(r.height))
                << "\" r=\"3.5\" fill=\"#1a6fb4\"/>\n";
        } else {
            line(out, map.x(r.left), map.y(r.height), map.x(r.right), map.y(r.height),
                 curve_style);
        }
    }

    if (!c.label.empty()) text(out, (map.px0 + map.px1) / 2.0, kMarginTop - 6, escape_xml(c.label), "middle");
    out << "</svg>\n";
    return out.str();
}

void save_curve_svg(const MembershipCurve& c, const std::string& path, const PlotOptions& opt) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << curve_to_svg(c, opt);
}

std::string curve_breakpoints_csv(const MembershipCurve& c) {
    if (c.regions.empty()) throw ValidationError("cannot tabulate an empty curve");
    std::vector<double> points;
    for (const auto& r : c.regions) {
        points.push_back(r.left);
        points.push_back(r.right);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::ostringstream out;
    out << "x,mu\n";
    for (double x : points) out << format_double(x) << ',' << format_double(height_at(c, x)) << '\n';
    return out.str();
}

void save_curve_breakpoints_csv(const MembershipCurve& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << curve_breakpoints_csv(c);
}

}  // namespace iaa
