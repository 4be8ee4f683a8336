#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casimir3/geometry.hpp"
#include "casimir3/quadrature.hpp"

namespace casimir3
{
//! Energies in units of hbar c / L0 for atoms responding to the other two
struct EnergyBreakdown
{
    double delta_E_A;
    double delta_E_B;
    double delta_E_C;
};

struct PotentialResult
{
    double value{0};
    double error_estimate{0};
    bool converged{true};
    CausalRegion region;
    std::optional<EnergyBreakdown> breakdown;
    double ct{0};
    std::vector<std::string> warnings;
};

//! Relative sign of the double-scattering contribution to delta_E_C
enum class DoubleScatteringSign
{
    same_as_single,  //!< reproduces the stationary energy at late times
    opposite,        //!< literal sign of the printed expression
};

struct PotentialOptions
{
    DoubleScatteringSign double_scattering{DoubleScatteringSign::same_as_single};
    double edge_eps{kEdgeEpsilon};
    double geometry_eps{kGeometryEpsilon};
};

/*!
 * Energy of atom C responding to the fields of A and B at time ct after all
 * three atoms start bare.
 *
 * Exactly zero (no quadrature) while C lies outside the light cone of A or
 * of B. The wavenumber integral of every phase component is rotated onto the
 * imaginary axis; components with a damped resonance that cannot be rotated
 * through the lower half plane are integrated along the real axis up to
 * beyond the resonance and rotated from there.
 */
PotentialResult delta_E_C(AtomConfig const& config,
                          double ct,
                          QuadratureSpec const& spec,
                          PotentialOptions const& options = {});

//! Mean of the three role-permuted delta_E_C values, breakdown populated
PotentialResult delta_E3_symmetrized(AtomConfig const& config,
                                     double ct,
                                     QuadratureSpec const& spec,
                                     PotentialOptions const& options = {});

/*!
 * Three-body energy while C sees A and B but A and B are mutually space-like.
 *
 * Evaluated along the real wavenumber axis from the angular-integrated
 * transverse projector: adaptive quadrature up to a finite K, then the
 * oscillatory tail from K to infinity summed as an Abel-regularized
 * asymptotic series built from a Taylor jet of the integrand at K. Independent
 * of the contour rotation used by delta_E_C. Throws RegionMismatch outside
 * alpha < ct, beta < ct, gamma > ct.
 */
PotentialResult delta_E3_spacelike_AB(AtomConfig const& config,
                                      double ct,
                                      QuadratureSpec const& spec,
                                      PotentialOptions const& options = {});

/*!
 * Correlation contribution of the A-B pair to the energy of C while C is
 * outside both light cones and A, B see each other. Throws RegionMismatch
 * outside alpha > ct, beta > ct, gamma < ct.
 */
PotentialResult delta_E_C_pair(AtomConfig const& config,
                               double ct,
                               QuadratureSpec const& spec,
                               PotentialOptions const& options = {});

//! Stationary three-body Casimir-Polder energy (imaginary-frequency form)
PotentialResult static_three_body(AtomConfig const& config,
                                  QuadratureSpec const& spec,
                                  PotentialOptions const& options = {});

/*!
 * The pair-correlation expression with both step gates forced open and
 * averaged over the three atom roles.
 *
 * Outside its own time window this is not the stationary energy; it is
 * provided for comparison.
 */
PotentialResult pair_energy_gates_open(AtomConfig const& config,
                                       QuadratureSpec const& spec,
                                       PotentialOptions const& options = {});

}  // namespace casimir3
