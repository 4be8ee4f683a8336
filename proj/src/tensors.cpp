#include "casimir3/tensors.hpp"

#include <cmath>
#include <numbers>

#include "casimir3/errors.hpp"

namespace casimir3
{
namespace
{
using namespace std::complex_literals;

struct Projectors
{
    Mat3 transverse;  // delta - n n
    Mat3 dipolar;     // delta - 3 n n
};

Projectors projectors(Vec3 const& n)
{
    Mat3 nn = n * n.transpose();
    return {Mat3::Identity() - nn, Mat3::Identity() - 3 * nn};
}

double checked_norm(Vec3 const& R_vec, double eps)
{
    double R = R_vec.norm();
    if (!(R > eps))
    {
        throw DegenerateGeometry("dipole tensor evaluated at vanishing separation");
    }
    return R;
}
}  // namespace

std::complex<double> KernelKind::operator()(double R) const
{
    double k = wavenumber;
    switch (type)
    {
        case Type::oscillatory_out:
            return std::exp(1i * (k * R)) / R;
        case Type::exponential_decay:
            return std::exp(-k * R) / R;
        case Type::exponential_grow:
            return std::exp(k * R) / R;
        case Type::static_coulomb:
            return 1.0 / R;
        case Type::cosine_standing:
            return std::cos(k * R) / R;
    }
    return 0.0;
}

Mat3c radiation_envelope(std::complex<double> k, int s, Vec3 const& R_vec)
{
    double R = R_vec.norm();
    auto [tr, dp] = projectors(R_vec / R);
    std::complex<double> a = k * k / R;
    std::complex<double> b = (1i * double(s)) * k / (R * R) - 1.0 / (R * R * R);
    return tr.cast<std::complex<double>>() * a + dp.cast<std::complex<double>>() * b;
}

Mat3 imaginary_axis_envelope(double u, int t, Vec3 const& R_vec)
{
    double R = R_vec.norm();
    auto [tr, dp] = projectors(R_vec / R);
    return tr * (-u * u / R) + dp * (-t * u / (R * R) - 1.0 / (R * R * R));
}

DipoleTensor f_tensor(KernelKind kernel, Vec3 const& R_vec, double eps)
{
    double R = checked_norm(R_vec, eps);
    double k = kernel.wavenumber;
    if (!(k >= 0))
    {
        throw InvalidArgument("kernel wavenumber must be non-negative");
    }
    Mat3c entries;
    switch (kernel.type)
    {
        case KernelKind::Type::oscillatory_out:
            entries = std::exp(1i * (k * R)) * radiation_envelope(k, +1, R_vec);
            break;
        case KernelKind::Type::exponential_decay:
            entries = (std::exp(-k * R) * imaginary_axis_envelope(k, +1, R_vec))
                          .cast<std::complex<double>>();
            break;
        case KernelKind::Type::exponential_grow:
            entries = (std::exp(k * R) * imaginary_axis_envelope(k, -1, R_vec))
                          .cast<std::complex<double>>();
            break;
        case KernelKind::Type::static_coulomb:
            entries = imaginary_axis_envelope(0, +1, R_vec).cast<std::complex<double>>();
            break;
        case KernelKind::Type::cosine_standing: {
            auto [tr, dp] = projectors(R_vec / R);
            Mat3 a = tr * (k * k / R) - dp / (R * R * R);
            Mat3 b = dp * (k / (R * R));
            entries = (std::cos(k * R) * a - std::sin(k * R) * b).cast<std::complex<double>>();
            break;
        }
    }
    // Exact symmetry regardless of rounding in the projector products
    entries = (0.5 * (entries + entries.transpose())).eval();
    return {entries, kernel, R_vec};
}

DipoleTensor classical_dipole_tensor(double k, Vec3 const& R_vec, double eps)
{
    return f_tensor(KernelKind::cosine_standing(k), R_vec, eps);
}

std::complex<double> triple_contract(Mat3c const& T1, Mat3c const& T2, Mat3c const& T3)
{
    // sum_lmn T1_lm T2_ln T3_mn = Tr(T1^T T2 T3^T)
    return (T1.transpose() * T2 * T3.transpose()).trace();
}

std::complex<double>
triple_contract(DipoleTensor const& T1, DipoleTensor const& T2, DipoleTensor const& T3)
{
    return triple_contract(T1.entries, T2.entries, T3.entries);
}

Mat3 transverse_projector(Vec3 const& k_hat)
{
    return Mat3::Identity() - k_hat * k_hat.transpose();
}

std::complex<double> double_contract_with_projector(Mat3c const& T, Vec3 const& k_hat)
{
    return (T.array() * transverse_projector(k_hat).cast<std::complex<double>>().array())
        .sum();
}

double spherical_j0(double x)
{
    if (std::abs(x) < 1e-3)
    {
        double x2 = x * x;
        return 1 - x2 / 6 + x2 * x2 / 120;
    }
    return std::sin(x) / x;
}

double transverse_radial(double x)
{
    if (std::abs(x) < 5e-2)
    {
        double x2 = x * x;
        return -1.0 / 3 + x2 / 30 - x2 * x2 / 840 + x2 * x2 * x2 / 45360;
    }
    return std::cos(x) / (x * x) - std::sin(x) / (x * x * x);
}

Mat3 angular_projector_integral(double k, Vec3 const& r)
{
    constexpr double four_pi = 4 * std::numbers::pi;
    double R = r.norm();
    if (R == 0)
    {
        return four_pi * (2.0 / 3) * Mat3::Identity();
    }
    double x = k * R;
    Mat3 nn = (r / R) * (r / R).transpose();
    // (delta - nn) j0 + (delta - 3nn) h with the nn part grouped so it
    // vanishes smoothly as x -> 0
    double j0 = spherical_j0(x);
    double h = transverse_radial(x);
    return four_pi * (Mat3::Identity() * (j0 + h) - nn * (j0 + 3 * h));
}

}  // namespace casimir3
