#pragma once

#include <string>

#include "iaa/curve.hpp"

namespace iaa {

struct PlotOptions {
    int width = 640;
    int height = 360;
};

/// Step plot of a curve as a standalone SVG 1.1 document: plateaus as
/// horizontal segments, spikes as vertical stems with a dot marker.
std::string curve_to_svg(const MembershipCurve& c, const PlotOptions& opt = {});
void save_curve_svg(const MembershipCurve& c, const std::string& path,
                    const PlotOptions& opt = {});

/// Breakpoint table "x,mu": one row per point of change, evaluated with
/// height_at (plateau ends and spike coordinates).
std::string curve_breakpoints_csv(const MembershipCurve& c);
void save_curve_breakpoints_csv(const MembershipCurve& c, const std::string& path);

}  // namespace iaa
