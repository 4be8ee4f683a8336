#pragma once

#include <string>

#include <Eigen/Dense>

#include "casimir3/polarizability.hpp"

namespace casimir3
{
using Vec3 = Eigen::Vector3d;

//! Minimum pair separation accepted for atoms (L0)
inline constexpr double kGeometryEpsilon = 1e-9;
//! Margin below which a light-cone comparison counts as exactly on the edge
inline constexpr double kEdgeEpsilon = 1e-10;

struct AtomConfig
{
    Vec3 position_A{Vec3::Zero()};
    Vec3 position_B{Vec3::UnitX()};
    Vec3 position_C{Vec3::UnitY()};
    PolarizabilityModel model_A;
    PolarizabilityModel model_B;
    PolarizabilityModel model_C;

    //! Throws DegenerateGeometry when two atoms are closer than eps
    void validate(double eps = kGeometryEpsilon) const;
    bool identical_models() const;
};

/*!
 * Side lengths and directions of the atom triangle.
 *
 * alpha = |r_B - r_C|, beta = |r_A - r_C|, gamma = |r_A - r_B|. Each unit
 * vector points from the second atom of its label to the first, e.g.
 * n_AB = (r_A - r_B) / gamma.
 */
struct TriangleGeometry
{
    double alpha;
    double beta;
    double gamma;
    Vec3 n_BC;
    Vec3 n_AC;
    Vec3 n_AB;
    bool collinear;

    Vec3 r_BC() const { return alpha * n_BC; }
    Vec3 r_AC() const { return beta * n_AC; }
    Vec3 r_AB() const { return gamma * n_AB; }
    double max_distance() const;
};

TriangleGeometry
triangle_from_positions(AtomConfig const& config, double eps = kGeometryEpsilon);

//! Outcome of comparing two lengths with an edge tolerance
enum class Comparison
{
    below,
    at,
    above,
};

char const* to_string(Comparison c);

/*!
 * Light-cone status of a triangle at time ct.
 *
 * Margins are signed lengths; a margin within the edge tolerance of zero is
 * classified "at" and the corresponding boolean is false.
 */
struct CausalRegion
{
    bool c_sees_A{false};
    bool c_sees_B{false};
    bool a_sees_B{false};
    Comparison cone_A{Comparison::below};   //!< ct versus beta
    Comparison cone_B{Comparison::below};   //!< ct versus alpha
    Comparison cone_AB{Comparison::below};  //!< ct versus gamma
    Comparison window_alpha{Comparison::below};  //!< alpha versus gamma + ct
    Comparison window_beta{Comparison::below};   //!< beta versus gamma + ct

    double margin_beta{0};        //!< ct - beta
    double margin_alpha{0};       //!< ct - alpha
    double margin_gamma{0};       //!< ct - gamma
    double window_margin_alpha{0};  //!< gamma + ct - alpha
    double window_margin_beta{0};   //!< gamma + ct - beta

    bool on_edge{false};

    //! Compact label such as "CA:Y|CB:=|AB:N|wa:above|wb:below"
    std::string label() const;
};

Comparison compare_margin(double margin, double eps = kEdgeEpsilon);

CausalRegion
classify_region(TriangleGeometry const& geom, double ct, double eps = kEdgeEpsilon);
CausalRegion classify_distances(
    double alpha, double beta, double gamma, double ct, double eps = kEdgeEpsilon);

//! Atom roles shifted cyclically: (A, B, C) -> (B, C, A)
AtomConfig cycle_roles(AtomConfig const& config);
//! Atoms A and B exchanged
AtomConfig swap_AB(AtomConfig const& config);

}  // namespace casimir3
