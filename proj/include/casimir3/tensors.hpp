#pragma once

#include <complex>

#include <Eigen/Dense>

#include "casimir3/geometry.hpp"

namespace casimir3
{
using Mat3 = Eigen::Matrix3d;
using Mat3c = Eigen::Matrix3cd;

//! Radial kernel acted on by the dipole operator -lap delta_ij + d_i d_j
struct KernelKind
{
    enum class Type
    {
        oscillatory_out,    //!< e^{ikR}/R
        exponential_decay,  //!< e^{-uR}/R
        exponential_grow,   //!< e^{+uR}/R
        static_coulomb,     //!< 1/R
        cosine_standing,    //!< cos(kR)/R
    };

    Type type{Type::static_coulomb};
    double wavenumber{0};

    static KernelKind oscillatory_out(double k) { return {Type::oscillatory_out, k}; }
    static KernelKind exponential_decay(double u) { return {Type::exponential_decay, u}; }
    static KernelKind exponential_grow(double u) { return {Type::exponential_grow, u}; }
    static KernelKind static_coulomb() { return {Type::static_coulomb, 0}; }
    static KernelKind cosine_standing(double k) { return {Type::cosine_standing, k}; }

    //! Value of the scalar kernel at distance R
    std::complex<double> operator()(double R) const;
};

struct DipoleTensor
{
    Mat3c entries;
    KernelKind kernel;
    Vec3 R_vec;
};

DipoleTensor
f_tensor(KernelKind kernel, Vec3 const& R_vec, double eps = kGeometryEpsilon);
DipoleTensor
classical_dipole_tensor(double k, Vec3 const& R_vec, double eps = kGeometryEpsilon);

//! Sum over l,m,n of T1[l][m] T2[l][n] T3[m][n]
std::complex<double> triple_contract(Mat3c const& T1, Mat3c const& T2, Mat3c const& T3);
std::complex<double>
triple_contract(DipoleTensor const& T1, DipoleTensor const& T2, DipoleTensor const& T3);

//! delta_mn - k_m k_n for a unit vector k
Mat3 transverse_projector(Vec3 const& k_hat);
//! Sum over m,n of T[m][n] (delta_mn - k_m k_n)
std::complex<double> double_contract_with_projector(Mat3c const& T, Vec3 const& k_hat);

/*!
 * Polynomial part of F acting on e^{i s k R}/R, so that
 * F[e^{i s k R}/R] = e^{i s k R} * radiation_envelope(k, s, R_vec).
 *
 * k may be complex; s is +1 or -1.
 */
Mat3c radiation_envelope(std::complex<double> k, int s, Vec3 const& R_vec);

/*!
 * Polynomial part of F acting on e^{-t u R}/R for t = +1 (decay) or
 * t = -1 (growth), so that F[e^{-t u R}/R] = e^{-t u R} * envelope.
 */
Mat3 imaginary_axis_envelope(double u, int t, Vec3 const& R_vec);

//! Integral over directions of (delta - k_hat k_hat) e^{i k k_hat . r}
Mat3 angular_projector_integral(double k, Vec3 const& r);
//! Radial functions of the angular integral: sin(x)/x and cos(x)/x^2 - sin(x)/x^3
double spherical_j0(double x);
double transverse_radial(double x);

}  // namespace casimir3
