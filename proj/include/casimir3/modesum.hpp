#pragma once

#include <optional>
#include <vector>

#include "casimir3/geometry.hpp"
#include "casimir3/quadrature.hpp"
#include "casimir3/tensors.hpp"

namespace casimir3
{
/*!
 * Periodic cubic box with modes k = 2 pi n / L, n in [-n_max, n_max]^3 \ {0}.
 *
 * With spherical_cutoff the sums keep only |k| <= 2 pi n_max / L so that
 * they match a continuum integral with the same upper limit.
 */
struct BoxSpec
{
    double L{40};
    int n_max{60};
    std::optional<double> soft_cutoff;
    bool spherical_cutoff{true};

    long mode_count() const;
    double k_max() const;
    void validate() const;
};

//! Sum over two explicit transverse polarization vectors of e (x) e
Mat3 polarization_sum(Vec3 const& k_hat);

//! (2 pi / V) sum over modes of k P(k) cos(k.(r1 - r2)) e^{-eta k}
Mat3 box_free_correlation(BoxSpec const& box, Vec3 const& r1, Vec3 const& r2, int threads = 1);

struct ContinuumCorrelation
{
    Mat3 value;
    double error_estimate;
    bool converged;
};

//! Continuum limit of box_free_correlation up to wavenumber k_max
ContinuumCorrelation continuum_free_correlation(Vec3 const& r,
                                                double eta,
                                                double k_max,
                                                QuadratureSpec const& spec = {});

//! Relative max-entry deviation between box and continuum correlations
double free_correlation_deviation(BoxSpec const& box, Vec3 const& r, int threads = 1);

//! Per-shell sums of P(k) cos(k.r) and cos(k.r) against their angular averages
struct ShellSums
{
    double k_center;
    long modes;
    Mat3 projector_discrete;
    Mat3 projector_analytic;
    double phase_discrete;
    double phase_analytic;
};

std::vector<ShellSums>
box_shell_sums(BoxSpec const& box, Vec3 const& r, double k_bin_width, int threads = 1);

struct ShellComparison
{
    double k_center;
    long modes;
    double discrete;
    double analytic;
    double deviation;
};

struct ReducedIntegrandReport
{
    std::vector<ShellComparison> shells;
    double mean_deviation{0};
    double max_deviation{0};
};

/*!
 * Shell-by-shell comparison of the transverse-mode structure of the
 * three-body response against its angular-integrated form.
 *
 * For each complete radial shell the three scattering terms
 * Tr(F_beta F_alpha P) cos(k.r_AB), Tr(F_beta F_gamma P) cos(k.r_BC) and
 * Tr(F_alpha F_gamma P) cos(k.r_AC), with tensors at the shell center, are
 * summed over modes and compared with the count-weighted angular average.
 * Deviations are normalized by the mode count and the tensor magnitudes.
 */
ReducedIntegrandReport box_reduced_integrand_check(BoxSpec const& box,
                                                   TriangleGeometry const& geom,
                                                   double k_bin_width,
                                                   int threads = 1);

}  // namespace casimir3
