#include "casimir3/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "casimir3/errors.hpp"

namespace casimir3
{
namespace
{
// Relative slack below which a triangle is flagged as collinear
constexpr double kCollinearTolerance = 1e-12;

double checked_distance(Vec3 const& a, Vec3 const& b, double eps, char const* pair)
{
    if (!a.allFinite() || !b.allFinite())
    {
        throw DegenerateGeometry(std::string("non-finite position for pair ") + pair);
    }
    double d = (a - b).norm();
    if (!(d > eps))
    {
        throw DegenerateGeometry(std::string("atoms ") + pair
                                 + " closer than the minimum separation");
    }
    return d;
}

char comparison_flag(Comparison c)
{
    switch (c)
    {
        case Comparison::above:
            return 'Y';
        case Comparison::at:
            return '=';
        default:
            return 'N';
    }
}
}  // namespace

void AtomConfig::validate(double eps) const
{
    checked_distance(position_A, position_B, eps, "AB");
    checked_distance(position_A, position_C, eps, "AC");
    checked_distance(position_B, position_C, eps, "BC");
}

bool AtomConfig::identical_models() const
{
    return model_A == model_B && model_B == model_C;
}

double TriangleGeometry::max_distance() const
{
    return std::max({alpha, beta, gamma});
}

TriangleGeometry triangle_from_positions(AtomConfig const& config, double eps)
{
    TriangleGeometry g;
    g.alpha = checked_distance(config.position_B, config.position_C, eps, "BC");
    g.beta = checked_distance(config.position_A, config.position_C, eps, "AC");
    g.gamma = checked_distance(config.position_A, config.position_B, eps, "AB");
    g.n_BC = (config.position_B - config.position_C) / g.alpha;
    g.n_AC = (config.position_A - config.position_C) / g.beta;
    g.n_AB = (config.position_A - config.position_B) / g.gamma;

    double longest = g.max_distance();
    double slack = std::min({g.alpha + g.beta - g.gamma,
                             g.alpha + g.gamma - g.beta,
                             g.beta + g.gamma - g.alpha});
    g.collinear = slack <= kCollinearTolerance * longest;
    return g;
}

char const* to_string(Comparison c)
{
    switch (c)
    {
        case Comparison::below:
            return "below";
        case Comparison::at:
            return "at";
        case Comparison::above:
            return "above";
    }
    return "?";
}

Comparison compare_margin(double margin, double eps)
{
    if (std::abs(margin) <= eps)
    {
        return Comparison::at;
    }
    return margin > 0 ? Comparison::above : Comparison::below;
}

CausalRegion classify_distances(double alpha, double beta, double gamma, double ct, double eps)
{
    if (!(ct >= 0))
    {
        throw InvalidArgument("ct must be non-negative");
    }
    CausalRegion r;
    r.margin_alpha = ct - alpha;
    r.margin_beta = ct - beta;
    r.margin_gamma = ct - gamma;
    r.window_margin_alpha = gamma + ct - alpha;
    r.window_margin_beta = gamma + ct - beta;

    r.cone_A = compare_margin(r.margin_beta, eps);
    r.cone_B = compare_margin(r.margin_alpha, eps);
    r.cone_AB = compare_margin(r.margin_gamma, eps);
    r.c_sees_A = r.cone_A == Comparison::above;
    r.c_sees_B = r.cone_B == Comparison::above;
    r.a_sees_B = r.cone_AB == Comparison::above;

    // alpha above gamma + ct when the window margin is negative
    auto window = [eps](double m) {
        Comparison c = compare_margin(m, eps);
        if (c == Comparison::above)
            return Comparison::below;
        if (c == Comparison::below)
            return Comparison::above;
        return c;
    };
    r.window_alpha = window(r.window_margin_alpha);
    r.window_beta = window(r.window_margin_beta);

    r.on_edge = r.cone_A == Comparison::at || r.cone_B == Comparison::at
                || r.cone_AB == Comparison::at || r.window_alpha == Comparison::at
                || r.window_beta == Comparison::at;
    return r;
}

CausalRegion classify_region(TriangleGeometry const& geom, double ct, double eps)
{
    return classify_distances(geom.alpha, geom.beta, geom.gamma, ct, eps);
}

std::string CausalRegion::label() const
{
    std::string s = "CA:";
    s += comparison_flag(cone_A);
    s += "|CB:";
    s += comparison_flag(cone_B);
    s += "|AB:";
    s += comparison_flag(cone_AB);
    s += "|wa:";
    s += to_string(window_alpha);
    s += "|wb:";
    s += to_string(window_beta);
    return s;
}

AtomConfig cycle_roles(AtomConfig const& c)
{
    AtomConfig out;
    out.position_A = c.position_B;
    out.position_B = c.position_C;
    out.position_C = c.position_A;
    out.model_A = c.model_B;
    out.model_B = c.model_C;
    out.model_C = c.model_A;
    return out;
}

AtomConfig swap_AB(AtomConfig const& c)
{
    AtomConfig out = c;
    std::swap(out.position_A, out.position_B);
    std::swap(out.model_A, out.model_B);
    return out;
}

}  // namespace casimir3
