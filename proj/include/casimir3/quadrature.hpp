#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace casimir3
{
struct QuadratureSpec
{
    double rel_tol{1e-8};
    double abs_tol{1e-12};
    int max_subdivisions{2000};
    //! Decreasing cutoff wavenumbers for regularized oscillatory integrals
    std::vector<double> eta_schedule{0.2, 0.1, 0.05, 0.025, 0.0125};
    int extrapolation_order{3};
    //! Accuracy target of the eta -> 0 extrapolation, relative to the
    //! largest regularized value
    double extrapolation_rel_tol{1e-3};

    //! Throws InvalidArgument when a field violates its invariant
    void validate() const;
};

template<class T>
struct IntegralResult
{
    T value{};
    double error_estimate{0};
    long evaluations{0};
    bool converged{true};
};

using RealIntegrand = std::function<double(double)>;
using ComplexIntegrand = std::function<std::complex<double>(double)>;

//! Adaptive 21-point Gauss-Kronrod integration over [a, b]
IntegralResult<double>
integrate_interval(RealIntegrand const& f, double a, double b, QuadratureSpec const& spec);
IntegralResult<std::complex<double>>
integrate_interval(ComplexIntegrand const& f, double a, double b, QuadratureSpec const& spec);

/*!
 * Integral over [0, inf) of an exponentially decaying integrand.
 *
 * The decay scale d splits the range into [0, 40 d] and a tail mapped onto
 * a finite interval with u = 40 d + d t / (1 - t). Panels from both pieces
 * share one global error budget.
 */
IntegralResult<double>
integrate_semi_infinite(RealIntegrand const& f, double decay_scale, QuadratureSpec const& spec);
IntegralResult<std::complex<double>> integrate_semi_infinite(ComplexIntegrand const& f,
                                                             double decay_scale,
                                                             QuadratureSpec const& spec);

/*!
 * Abel-regularized integral lim_{eta->0} of f(k) e^{-eta k} over [0, inf).
 *
 * Each eta of the schedule is integrated with integrate_semi_infinite and the
 * results are extrapolated polynomially to eta = 0. The error estimate adds
 * the difference between the last two extrapolants to the propagated
 * quadrature errors; throws ExtrapolationUnstable when that difference
 * exceeds ten times the extrapolation target.
 */
IntegralResult<double>
integrate_oscillatory_regularized(RealIntegrand const& f, QuadratureSpec const& spec);

/*!
 * Value at zero of the polynomial through (x_i, y_i).
 *
 * Also returns the Lebesgue sum of |l_i(0)| and the propagated bound
 * sum |l_i(0)| e_i of the data errors e_i (when given).
 */
struct ZeroExtrapolation
{
    double value;
    double lebesgue;
    double propagated_error;
};
ZeroExtrapolation extrapolate_to_zero(std::vector<double> const& x,
                                      std::vector<double> const& y,
                                      std::vector<double> const& errors = {});

}  // namespace casimir3
