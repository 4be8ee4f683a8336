#include "casimir3/polarizability.hpp"

#include <cmath>
#include <string>

#include "casimir3/errors.hpp"

namespace casimir3
{
namespace
{
template<class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};
template<class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(double value, char const* name)
{
    if (!(value > 0) || !std::isfinite(value))
    {
        throw InvalidArgument(std::string(name) + " must be positive and finite");
    }
}
}  // namespace

PolarizabilityModel PolarizabilityModel::make_static(double alpha0)
{
    require_positive(alpha0, "alpha0");
    return PolarizabilityModel(StaticModel{alpha0});
}

PolarizabilityModel PolarizabilityModel::make_single_resonance(double alpha0,
                                                               double k0,
                                                               double gamma_damp)
{
    require_positive(alpha0, "alpha0");
    require_positive(k0, "k0");
    if (!(gamma_damp >= 0) || !std::isfinite(gamma_damp))
    {
        throw InvalidArgument("gamma_damp must be non-negative and finite");
    }
    return PolarizabilityModel(SingleResonanceModel{alpha0, k0, gamma_damp});
}

double PolarizabilityModel::alpha0() const
{
    return std::visit([](auto const& m) { return m.alpha0; }, model_);
}

bool PolarizabilityModel::is_damped() const
{
    auto const* sr = std::get_if<SingleResonanceModel>(&model_);
    return sr && sr->gamma_damp > 0;
}

std::complex<double> PolarizabilityModel::shape(std::complex<double> k) const
{
    return std::visit(
        Overloaded{[](StaticModel const&) { return std::complex<double>(1.0); },
                   [k](SingleResonanceModel const& m) {
                       using namespace std::complex_literals;
                       double k0sq = m.k0 * m.k0;
                       return k0sq / (k0sq - k * k - 1i * m.gamma_damp * k);
                   }},
        model_);
}

double PolarizabilityModel::shape_imag(double u) const
{
    return std::visit(Overloaded{[](StaticModel const&) { return 1.0; },
                                 [u](SingleResonanceModel const& m) {
                                     double k0sq = m.k0 * m.k0;
                                     return k0sq / (k0sq + u * u + m.gamma_damp * u);
                                 }},
                      model_);
}

double PolarizabilityModel::scale() const
{
    return std::visit(Overloaded{[](StaticModel const&) { return 0.0; },
                                 [](SingleResonanceModel const& m) { return m.k0; }},
                      model_);
}

PolarizabilityModel PolarizabilityModel::scaled(double factor) const
{
    return std::visit(
        Overloaded{[factor](StaticModel const& m) {
                       return make_static(m.alpha0 * factor);
                   },
                   [factor](SingleResonanceModel const& m) {
                       return make_single_resonance(m.alpha0 * factor, m.k0, m.gamma_damp);
                   }},
        model_);
}

bool operator==(PolarizabilityModel const& a, PolarizabilityModel const& b)
{
    return std::visit(
        Overloaded{
            [](StaticModel const& x, StaticModel const& y) { return x.alpha0 == y.alpha0; },
            [](SingleResonanceModel const& x, SingleResonanceModel const& y) {
                return x.alpha0 == y.alpha0 && x.k0 == y.k0
                       && x.gamma_damp == y.gamma_damp;
            },
            [](auto const&, auto const&) { return false; }},
        a.model_,
        b.model_);
}

std::complex<double> alpha_real(PolarizabilityModel const& model, double k)
{
    if (!(k >= 0))
    {
        throw InvalidArgument("alpha_real requires k >= 0");
    }
    if (auto const* sr = std::get_if<SingleResonanceModel>(&model.variant()))
    {
        if (sr->gamma_damp == 0 && std::abs(k - sr->k0) < kPoleEpsilon * sr->k0)
        {
            throw PoleOnAxis("undamped resonance evaluated at k = "
                             + std::to_string(k));
        }
    }
    return model.alpha0() * model.shape(k);
}

double alpha_imag(PolarizabilityModel const& model, double u)
{
    if (!(u >= 0))
    {
        throw InvalidArgument("alpha_imag requires u >= 0");
    }
    return model.alpha0() * model.shape_imag(u);
}

}  // namespace casimir3
