#pragma once

#include <string>
#include <vector>

#include "app/runner.hpp"

namespace casimir3::app
{
struct PlotMarker
{
    double x;
    std::string label;
};

/*!
 * Standalone SVG of value against the sweep coordinate, one polyline per
 * quantity, on a symmetric logarithmic value axis. Markers are drawn as
 * labelled vertical lines.
 */
std::string render_svg(std::vector<Row> const& rows,
                       std::vector<double> const& x,
                       std::string const& x_label,
                       std::vector<PlotMarker> const& markers);

}  // namespace casimir3::app
