#include "app/plot.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace casimir3::app
{
namespace
{
constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kLeft = 80;
constexpr double kRight = 20;
constexpr double kTop = 20;
constexpr double kBottom = 60;

char const* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

// asinh-style map: linear near zero, logarithmic in the tails
double symlog(double v, double linthresh)
{
    return std::copysign(std::log10(1 + std::abs(v) / linthresh), v);
}
}  // namespace

std::string render_svg(std::vector<Row> const& rows,
                       std::vector<double> const& x,
                       std::string const& x_label,
                       std::vector<PlotMarker> const& markers)
{
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    double smallest = HUGE_VAL;
    for (std::size_t i = 0; i < rows.size() && i < x.size(); ++i)
    {
        if (!rows[i].value || !std::isfinite(*rows[i].value))
            continue;
        series[rows[i].quantity].emplace_back(x[i], *rows[i].value);
        if (*rows[i].value != 0)
            smallest = std::min(smallest, std::abs(*rows[i].value));
    }
    double linthresh = std::isfinite(smallest) ? smallest : 1.0;

    double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
    for (double v : x)
    {
        xmin = std::min(xmin, v);
        xmax = std::max(xmax, v);
    }
    for (auto const& [name, pts] : series)
    {
        for (auto const& [px, py] : pts)
        {
            ymin = std::min(ymin, symlog(py, linthresh));
            ymax = std::max(ymax, symlog(py, linthresh));
        }
    }
    if (!(xmax > xmin))
    {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (!(ymax > ymin))
    {
        ymin = std::isfinite(ymin) ? ymin - 1 : -1;
        ymax = ymin + 2;
    }
    auto sx = [&](double v) {
        return kLeft + (v - xmin) / (xmax - xmin) * (kWidth - kLeft - kRight);
    };
    auto sy = [&](double v) {
        return kHeight - kBottom - (v - ymin) / (ymax - ymin) * (kHeight - kTop - kBottom);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
       << kWidth - kLeft - kRight << "\" height=\"" << kHeight - kTop - kBottom
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    if (ymin < 0 && ymax > 0)
    {
        os << "<line x1=\"" << kLeft << "\" x2=\"" << kWidth - kRight << "\" y1=\"" << sy(0)
           << "\" y2=\"" << sy(0) << "\" stroke=\"#999\" stroke-dasharray=\"2,2\"/>\n";
    }

    for (auto const& m : markers)
    {
        if (m.x < xmin || m.x > xmax)
            continue;
        os << "<line x1=\"" << sx(m.x) << "\" x2=\"" << sx(m.x) << "\" y1=\"" << kTop
           << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"#888\"/>\n";
        os << "<text x=\"" << sx(m.x) + 3 << "\" y=\"" << kTop + 12 << "\" fill=\"#555\">"
           << m.label << "</text>\n";
    }

    int index = 0;
    for (auto const& [name, pts] : series)
    {
        char const* color = kColors[index % 5];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
        for (auto const& [px, py] : pts)
            os << sx(px) << ',' << sy(symlog(py, linthresh)) << ' ';
        os << "\"/>\n";
        os << "<text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 30 + 14 * index << "\" fill=\""
           << color << "\">" << name << "</text>\n";
        ++index;
    }

    os << "<text x=\"" << kLeft << "\" y=\"" << kHeight - kBottom + 16 << "\">"
       << xmin << "</text>\n";
    os << "<text x=\"" << kWidth - kRight << "\" y=\"" << kHeight - kBottom + 16
       << "\" text-anchor=\"end\">" << xmax << "</text>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15
       << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
    os << "<text x=\"15\" y=\"" << kHeight / 2 << "\" transform=\"rotate(-90 15 "
       << kHeight / 2 << ")\" text-anchor=\"middle\">energy (symlog, linear below "
       << linthresh << ")</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace casimir3::app
