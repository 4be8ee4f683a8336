#include <cmath>
#include <numbers>
#include <random>

#include "casimir3/errors.hpp"
#include "casimir3/quadrature.hpp"
#include "casimir3/tensors.hpp"
#include "doctest.h"

using namespace casimir3;
using cplx = std::complex<double>;

namespace
{
// F_ij = -lap f delta_ij + d_i d_j f from central differences of the scalar kernel
Mat3c finite_difference_tensor(KernelKind const& kernel, Vec3 const& R)
{
    double h = 1e-4 * R.norm();
    auto f = [&](Vec3 const& x) { return kernel(x.norm()); };
    Eigen::Matrix3cd H;
    for (int i = 0; i < 3; ++i)
    {
        for (int j = 0; j < 3; ++j)
        {
            Vec3 ei = h * Vec3::Unit(i), ej = h * Vec3::Unit(j);
            if (i == j)
                H(i, j) = (f(R + ei) - 2.0 * f(R) + f(R - ei)) / (h * h);
            else
                H(i, j) = (f(R + ei + ej) - f(R + ei - ej) - f(R - ei + ej) + f(R - ei - ej))
                          / (4 * h * h);
        }
    }
    return -H.trace() * Mat3c::Identity() + H;
}

double relative_max(Mat3c const& a, Mat3c const& b)
{
    return (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff();
}

KernelKind kernel_of(int kind, double w)
{
    switch (kind)
    {
        case 0:
            return KernelKind::oscillatory_out(w);
        case 1:
            return KernelKind::exponential_decay(w);
        case 2:
            return KernelKind::exponential_grow(w);
        case 3:
            return KernelKind::static_coulomb();
        default:
            return KernelKind::cosine_standing(w);
    }
}
}  // namespace

TEST_CASE("analytic tensor matches finite differences for every kernel")
{
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> n;
    std::uniform_real_distribution<double> len(0.3, 3), wave(0, 3);
    double worst = 0;
    for (int s = 0; s < 200; ++s)
    {
        Vec3 dir(n(rng), n(rng), n(rng));
        Vec3 R = len(rng) * dir.normalized();
        auto kernel = kernel_of(s % 5, wave(rng));
        auto analytic = f_tensor(kernel, R).entries;
        double err = relative_max(analytic, finite_difference_tensor(kernel, R));
        worst = std::max(worst, err);
        CHECK(err < 1e-6);
    }
    MESSAGE("worst finite-difference deviation " << worst);
}

TEST_CASE("static Coulomb tensor on the z axis")
{
    auto t = f_tensor(KernelKind::static_coulomb(), Vec3(0, 0, 1)).entries;
    Mat3c expected = Mat3c::Zero();
    expected.diagonal() << -1, -1, 2;
    CHECK((t - expected).norm() < 1e-15);
    CHECK(relative_max(t, finite_difference_tensor(KernelKind::static_coulomb(), Vec3(0, 0, 1)))
          < 1e-6);
}

TEST_CASE("kernel identities")
{
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n;
    for (int i = 0; i < 20; ++i)
    {
        Vec3 R(n(rng), n(rng), n(rng));
        auto coulomb = f_tensor(KernelKind::static_coulomb(), R).entries;
        CHECK((f_tensor(KernelKind::oscillatory_out(0), R).entries - coulomb).norm()
              <= 1e-14 * coulomb.norm());
        CHECK((classical_dipole_tensor(0, R).entries - coulomb).norm() <= 1e-14 * coulomb.norm());

        for (auto kernel : {KernelKind::exponential_decay(1.3),
                            KernelKind::exponential_grow(0.7),
                            KernelKind::cosine_standing(2.1)})
        {
            auto t = f_tensor(kernel, R).entries;
            CHECK(t.imag().norm() == 0);
            CHECK(t == t.transpose());
        }
        auto osc = f_tensor(KernelKind::oscillatory_out(1.7), R).entries;
        CHECK(osc == osc.transpose());

        // cos(kR)/R is the mean of the outgoing wave and its conjugate
        auto cosine = classical_dipole_tensor(2.1, R).entries;
        auto out = f_tensor(KernelKind::oscillatory_out(2.1), R).entries;
        CHECK((cosine - out.real().cast<cplx>()).norm() <= 1e-13 * cosine.norm());
    }
    CHECK_THROWS_AS(f_tensor(KernelKind::static_coulomb(), Vec3(0, 0, 1e-10)),
                    DegenerateGeometry);
}

TEST_CASE("tensor rotates covariantly")
{
    std::mt19937_64 rng(9);
    std::normal_distribution<double> n;
    for (int i = 0; i < 50; ++i)
    {
        Vec3 R(n(rng), n(rng), n(rng));
        Mat3 Q = Eigen::Quaterniond(n(rng), n(rng), n(rng), n(rng)).normalized().toRotationMatrix();
        auto kernel = kernel_of(i % 5, 1.1);
        Mat3c rotated = f_tensor(kernel, Q * R).entries;
        Mat3c expected = Q.cast<cplx>() * f_tensor(kernel, R).entries * Q.transpose().cast<cplx>();
        CHECK((rotated - expected).norm() <= 1e-10 * expected.norm());
    }
}

TEST_CASE("far-zone coefficient is transverse")
{
    Vec3 R(0.3, -1.2, 0.8);
    Vec3 n_hat = R.normalized();
    Mat3 far = Mat3::Identity() - n_hat * n_hat.transpose();
    CHECK((far * n_hat).norm() < 1e-15);
    // The 1/R coefficient dominates at large kR
    double k = 1e4;
    Mat3c env = radiation_envelope(k, 1, R) * R.norm() / (k * k);
    CHECK((env - far.cast<cplx>()).norm() < 1e-3);
}

TEST_CASE("envelopes reproduce the full tensors")
{
    Vec3 R(0.4, 0.9, -0.2);
    double r = R.norm();
    for (int s : {1, -1})
    {
        double k = 1.9;
        Mat3c full = f_tensor(KernelKind::oscillatory_out(k), R).entries;
        Mat3c env = std::exp(cplx(0, s * k * r)) * radiation_envelope(k, s, R);
        if (s == 1)
            CHECK((env - full).norm() <= 1e-13 * full.norm());
        else
            CHECK((env - full.conjugate()).norm() <= 1e-13 * full.norm());
    }
    Mat3 decay = std::exp(-0.8 * r) * imaginary_axis_envelope(0.8, 1, R);
    CHECK((decay.cast<cplx>() - f_tensor(KernelKind::exponential_decay(0.8), R).entries).norm()
          < 1e-13 * decay.norm());
    Mat3 grow = std::exp(0.8 * r) * imaginary_axis_envelope(0.8, -1, R);
    CHECK((grow.cast<cplx>() - f_tensor(KernelKind::exponential_grow(0.8), R).entries).norm()
          < 1e-13 * grow.norm());
}

TEST_CASE("triple contraction")
{
    Mat3c I = Mat3c::Identity();
    CHECK(triple_contract(I, I, I) == cplx(3, 0));
    CHECK(triple_contract(I, I, Mat3c::Zero()) == cplx(0, 0));

    std::mt19937_64 rng(1);
    std::normal_distribution<double> n;
    for (int t = 0; t < 20; ++t)
    {
        Mat3c T[3];
        for (auto& m : T)
        {
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j)
                    m(i, j) = m(j, i) = cplx(n(rng), n(rng));
        }
        cplx loop = 0;
        for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m)
                for (int k = 0; k < 3; ++k)
                    loop += T[0](l, m) * T[1](l, k) * T[2](m, k);
        CHECK(std::abs(triple_contract(T[0], T[1], T[2]) - loop) < 1e-13 * (1 + std::abs(loop)));
    }
}

TEST_CASE("transverse projector contractions")
{
    std::mt19937_64 rng(4);
    std::normal_distribution<double> n;
    for (int t = 0; t < 20; ++t)
    {
        Vec3 k_hat = Vec3(n(rng), n(rng), n(rng)).normalized();
        Mat3 P = transverse_projector(k_hat);
        CHECK(std::abs(P.trace() - 2) < 1e-14);
        CHECK(std::abs(double_contract_with_projector(Mat3c::Identity(), k_hat) - 2.0) < 1e-14);
        Mat3c kk = (k_hat * k_hat.transpose()).cast<cplx>();
        CHECK(std::abs(double_contract_with_projector(kk, k_hat)) < 1e-14);

        // explicit orthonormal polarization pair
        Vec3 e1 = k_hat.unitOrthogonal();
        Vec3 e2 = k_hat.cross(e1);
        Mat3c T = Mat3c::Random();
        cplx explicit_sum = e1.cast<cplx>().dot(T * e1.cast<cplx>())
                            + e2.cast<cplx>().dot(T * e2.cast<cplx>());
        CHECK(std::abs(double_contract_with_projector(T, k_hat) - explicit_sum) < 1e-13);
    }
}

TEST_CASE("angular projector integral matches direct sphere quadrature")
{
    QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    spec.abs_tol = 1e-13;
    Vec3 r(0.3, -0.5, 0.7);
    double k = 2.3;
    Mat3 analytic = angular_projector_integral(k, r);
    for (int a = 0; a < 3; ++a)
    {
        for (int b = a; b < 3; ++b)
        {
            auto outer = [&](double theta) {
                auto inner = [&](double phi) {
                    Vec3 kh(std::sin(theta) * std::cos(phi),
                            std::sin(theta) * std::sin(phi),
                            std::cos(theta));
                    double p = (a == b ? 1.0 : 0.0) - kh[a] * kh[b];
                    return p * std::cos(k * kh.dot(r)) * std::sin(theta);
                };
                return integrate_interval(RealIntegrand(inner), 0, 2 * std::numbers::pi, spec)
                    .value;
            };
            double direct
                = integrate_interval(RealIntegrand(outer), 0, std::numbers::pi, spec).value;
            CHECK(std::abs(direct - analytic(a, b)) < 1e-9);
        }
    }
    Mat3 origin = angular_projector_integral(k, Vec3::Zero());
    CHECK((origin - 4 * std::numbers::pi * (2.0 / 3) * Mat3::Identity()).norm() < 1e-14);
}

TEST_CASE("radial functions have smooth small-argument limits")
{
    CHECK(spherical_j0(0) == 1);
    CHECK(transverse_radial(0) == doctest::Approx(-1.0 / 3));
    for (double x : {1e-6, 1e-3, 0.05, 0.2, 1.0, 10.0})
    {
        CHECK(spherical_j0(x) == doctest::Approx(std::sin(x) / x).epsilon(1e-12));
        if (x >= 0.2)
            CHECK(transverse_radial(x)
                  == doctest::Approx(std::cos(x) / (x * x) - std::sin(x) / (x * x * x))
                         .epsilon(1e-10));
    }
}
