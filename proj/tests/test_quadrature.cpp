#include <cmath>
#include <numbers>
#include <random>

#include "casimir3/errors.hpp"
#include "casimir3/quadrature.hpp"
#include "doctest.h"

using namespace casimir3;
using cplx = std::complex<double>;

TEST_CASE("semi-infinite analytic integrals")
{
    QuadratureSpec spec;
    auto check = [&](RealIntegrand f, double scale, double exact) {
        auto r = integrate_semi_infinite(f, scale, spec);
        CHECK(r.converged);
        CHECK(std::abs(r.value - exact) < 1e-10);
        CHECK(r.error_estimate >= 0);
    };
    check([](double u) { return std::exp(-u); }, 1, 1);
    check([](double u) { return u * std::exp(-u); }, 1, 1);
    check([](double u) { return std::exp(-2 * u); }, 0.5, 0.5);
}

TEST_CASE("finite interval, real and complex")
{
    QuadratureSpec spec;
    auto r = integrate_interval(RealIntegrand([](double x) { return std::sin(x); }),
                                0,
                                std::numbers::pi,
                                spec);
    CHECK(r.value == doctest::Approx(2).epsilon(1e-12));
    auto c = integrate_interval(
        ComplexIntegrand([](double x) { return std::exp(cplx(0, x)); }), 0, std::numbers::pi, spec);
    CHECK(std::abs(c.value - cplx(0, 2)) < 1e-12);
    auto z = integrate_semi_infinite(
        ComplexIntegrand([](double u) { return std::exp(cplx(-1, 1) * u); }), 1, spec);
    CHECK(std::abs(z.value - cplx(0.5, 0.5)) < 1e-10);
}

TEST_CASE("regularized oscillatory limits")
{
    QuadratureSpec spec;
    auto sin_k = integrate_oscillatory_regularized(RealIntegrand([](double k) { return std::sin(k); }),
                                                   spec);
    CHECK(sin_k.converged);
    CHECK(std::abs(sin_k.value - 1) <= std::max(sin_k.error_estimate, 1e-5));
    CHECK(std::abs(sin_k.value - 1) < 1e-5);

    auto cos_2k = integrate_oscillatory_regularized(
        RealIntegrand([](double k) { return std::cos(2 * k); }), spec);
    CHECK(std::abs(cos_2k.value) < 1e-5);

    auto k_sin = integrate_oscillatory_regularized(
        RealIntegrand([](double k) { return k * std::sin(k); }), spec);
    CHECK(std::abs(k_sin.value) < 1e-3);
}

TEST_CASE("regularized integral is linear")
{
    QuadratureSpec spec;
    auto f = [](double k) { return std::sin(1.5 * k); };
    auto g = [](double k) { return std::cos(0.7 * k) + std::exp(-k); };
    auto rf = integrate_oscillatory_regularized(RealIntegrand(f), spec);
    auto rg = integrate_oscillatory_regularized(RealIntegrand(g), spec);
    auto rs = integrate_oscillatory_regularized(
        RealIntegrand([&](double k) { return f(k) + g(k); }), spec);
    CHECK(std::abs(rs.value - rf.value - rg.value)
          <= rs.error_estimate + rf.error_estimate + rg.error_estimate + 1e-12);
}

TEST_CASE("error estimate bounds the true error on the analytic family")
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> a_dist(0.2, 5), b_dist(0.1, 10), eta_dist(0.05, 2);
    std::uniform_int_distribution<int> n_dist(0, 4), family(0, 2);
    QuadratureSpec spec;
    for (int draw = 0; draw < 100; ++draw)
    {
        double a = a_dist(rng), b = b_dist(rng), eta = eta_dist(rng);
        int n = n_dist(rng);
        int fam = family(rng);
        RealIntegrand f;
        double exact, scale;
        if (fam == 0)
        {
            f = [a](double u) { return std::exp(-a * u); };
            exact = 1 / a;
            scale = 1 / a;
        }
        else if (fam == 1)
        {
            f = [a, n](double u) { return std::pow(u, n) * std::exp(-a * u); };
            exact = std::tgamma(n + 1) / std::pow(a, n + 1);
            scale = (n + 1) / a;
        }
        else
        {
            f = [b, eta](double k) { return std::sin(b * k) * std::exp(-eta * k); };
            exact = b / (b * b + eta * eta);
            scale = 1 / eta;
        }
        auto r = integrate_semi_infinite(f, scale, spec);
        double err = std::abs(r.value - exact);
        INFO("family " << fam << " a=" << a << " b=" << b << " eta=" << eta << " n=" << n);
        CHECK(r.converged);
        CHECK(err <= r.error_estimate);
        CHECK(r.error_estimate <= std::max(spec.rel_tol * std::abs(r.value), spec.abs_tol));

        // tightening the tolerance never makes the answer worse beyond rounding
        QuadratureSpec tighter = spec;
        tighter.rel_tol /= 2;
        auto r2 = integrate_semi_infinite(f, scale, tighter);
        CHECK(std::abs(r2.value - exact) <= err + 1e-14 * std::abs(exact));
    }
}

TEST_CASE("polynomial extrapolation to zero")
{
    std::vector<double> x{0.2, 0.1, 0.05, 0.025};
    std::vector<double> y;
    for (double v : x)
        y.push_back(3 - 2 * v + 5 * v * v - v * v * v);
    auto e = extrapolate_to_zero(x, y, {1e-6, 1e-6, 1e-6, 1e-6});
    CHECK(e.value == doctest::Approx(3).epsilon(1e-12));
    CHECK(e.lebesgue >= 1);
    CHECK(e.propagated_error == doctest::Approx(1e-6 * e.lebesgue));
}

TEST_CASE("quadrature settings validation")
{
    QuadratureSpec spec;
    CHECK_NOTHROW(spec.validate());
    spec.rel_tol = 0;
    CHECK_THROWS_AS(spec.validate(), InvalidArgument);
    spec = {};
    spec.eta_schedule = {0.1, 0.2, 0.05, 0.01};
    CHECK_THROWS_AS(spec.validate(), InvalidArgument);
    spec = {};
    spec.eta_schedule = {0.2, 0.1, 0.05};
    CHECK_THROWS_AS(spec.validate(), InvalidArgument);
}

TEST_CASE("an exhausted subdivision budget is reported")
{
    QuadratureSpec spec;
    spec.max_subdivisions = 3;
    spec.rel_tol = 1e-14;
    spec.abs_tol = 1e-300;
    auto r = integrate_interval(RealIntegrand([](double x) { return std::sin(50 * x) / (x + 1e-3); }),
                                0,
                                10,
                                spec);
    CHECK_FALSE(r.converged);
    CHECK(r.error_estimate > 0);
}
