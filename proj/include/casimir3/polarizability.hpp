#pragma once

#include <complex>
#include <variant>

namespace casimir3
{
//! Frequency-independent polarizability.
struct StaticModel
{
    double alpha0;
};

//! Lorentz oscillator alpha0 k0^2 / (k0^2 - k^2 - i gamma k).
struct SingleResonanceModel
{
    double alpha0;
    double k0;
    double gamma_damp;
};

/*!
 * Isotropic dynamical polarizability of one atom.
 *
 * Lengths are in the user unit L0, wavenumbers in 1/L0 and polarizabilities
 * in L0^3. Instances are immutable once constructed.
 */
class PolarizabilityModel
{
  public:
    static PolarizabilityModel make_static(double alpha0);
    static PolarizabilityModel
    make_single_resonance(double alpha0, double k0, double gamma_damp);

    //! Defaults to a unit static polarizability
    PolarizabilityModel() : PolarizabilityModel(make_static(1.0)) {}

    double alpha0() const;
    bool is_static() const { return std::holds_alternative<StaticModel>(model_); }
    bool is_damped() const;

    //! alpha(k) / alpha0 on the real axis (k may be complex off-axis)
    std::complex<double> shape(std::complex<double> k) const;
    //! alpha(iu) / alpha0
    double shape_imag(double u) const;
    //! Wavenumber scale over which alpha(iu) varies (0 for static)
    double scale() const;

    PolarizabilityModel scaled(double factor) const;

    std::variant<StaticModel, SingleResonanceModel> const& variant() const
    {
        return model_;
    }

    friend bool
    operator==(PolarizabilityModel const& a, PolarizabilityModel const& b);

  private:
    explicit PolarizabilityModel(std::variant<StaticModel, SingleResonanceModel> m)
        : model_(m)
    {
    }

    std::variant<StaticModel, SingleResonanceModel> model_;
};

//! Relative distance to an undamped resonance below which evaluation fails
inline constexpr double kPoleEpsilon = 1e-8;

std::complex<double> alpha_real(PolarizabilityModel const& model, double k);
double alpha_imag(PolarizabilityModel const& model, double u);

}  // namespace casimir3
