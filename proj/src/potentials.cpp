#include "casimir3/potentials.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <type_traits>

#include "casimir3/errors.hpp"
#include "casimir3/tensors.hpp"
#include "taylor_jet.hpp"

namespace casimir3
{
namespace
{
using namespace std::complex_literals;
using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
// Exponents smaller than this fraction of the longest side are treated as
// vanishing (collinear atoms); a pattern that keeps such an exponent after
// merging diverges
constexpr double kPhaseEpsilon = 1e-12;
// Taylor order of the amplitude expansion used for the real-axis tail
constexpr int kTailOrder = 48;
using TailJet = detail::Jet<kTailOrder>;

// Sides ordered (alpha, beta, gamma) with vectors r_BC, r_AC, r_AB
struct Sides
{
    std::array<Vec3, 3> r;
    std::array<double, 3> d;
};

Sides sides_of(TriangleGeometry const& g)
{
    return {{g.r_BC(), g.r_AC(), g.r_AB()}, {g.alpha, g.beta, g.gamma}};
}

// Per-side choice of kernel: +1 for e^{-ux}/x, -1 for e^{+ux}/x
using Pattern = std::array<int, 3>;

// Phase component of a real-axis integrand: signs s of e^{i s k x} per side
struct Component
{
    std::array<int, 3> s;
    cplx coef;
};

struct Accumulated
{
    cplx value{0};
    double error{0};
    bool converged{true};
};

double step(double margin, double eps)
{
    if (std::abs(margin) <= eps)
        return 0.5;
    return margin > 0 ? 1.0 : 0.0;
}

double sign(double x, double eps)
{
    if (std::abs(x) <= eps)
        return 0.0;
    return x > 0 ? 1.0 : -1.0;
}

double alpha0_product(AtomConfig const& c)
{
    return c.model_A.alpha0() * c.model_B.alpha0() * c.model_C.alpha0();
}

double shape_product_imag(AtomConfig const& c, double u)
{
    return c.model_A.shape_imag(u) * c.model_B.shape_imag(u) * c.model_C.shape_imag(u);
}

cplx shape_product(AtomConfig const& c, cplx k)
{
    return c.model_A.shape(k) * c.model_B.shape(k) * c.model_C.shape(k);
}

bool all_static(AtomConfig const& c)
{
    return c.model_A.is_static() && c.model_B.is_static() && c.model_C.is_static();
}

void require_pole_free_axis(AtomConfig const& c)
{
    for (auto const* m : {&c.model_A, &c.model_B, &c.model_C})
    {
        if (!m->is_static() && !m->is_damped())
        {
            throw PoleOnAxis(
                "real-axis wavenumber integral crosses an undamped resonance");
        }
    }
}

// Largest wavenumber at which a resonance pole can sit, plus margin
double beyond_resonances(AtomConfig const& c)
{
    double k = 0;
    for (auto const* m : {&c.model_A, &c.model_B, &c.model_C})
    {
        if (auto const* sr = std::get_if<SingleResonanceModel>(&m->variant()))
        {
            k = std::max(k, 2 * (sr->k0 + sr->gamma_damp));
        }
    }
    return k;
}

IntegralResult<double> divergent()
{
    return {std::numeric_limits<double>::quiet_NaN(), kInf, 0, false};
}

// Integral over u of alpha(iu) Tr(F F F) with the chosen exponential kernels,
// normalized by the alpha0 product
IntegralResult<double> pattern_integral(AtomConfig const& config,
                                        Sides const& sides,
                                        Pattern const& t,
                                        QuadratureSpec const& spec)
{
    double a = t[0] * sides.d[0] + t[1] * sides.d[1] + t[2] * sides.d[2];
    double longest = std::max({sides.d[0], sides.d[1], sides.d[2]});
    if (!(a > kPhaseEpsilon * longest))
    {
        return divergent();
    }
    auto integrand = [&](double u) {
        double damp = std::exp(-u * a);
        if (damp == 0)
            return 0.0;
        Mat3 product = imaginary_axis_envelope(u, t[0], sides.r[0])
                       * imaginary_axis_envelope(u, t[1], sides.r[1])
                       * imaginary_axis_envelope(u, t[2], sides.r[2]);
        return shape_product_imag(config, u) * product.trace() * damp;
    };
    return integrate_semi_infinite(RealIntegrand(integrand), 1 / a, spec);
}

// Real-axis component whose phase decreases: integrate along the axis past
// the resonances, then straight down into the lower half plane
IntegralResult<cplx> bent_contour_integral(AtomConfig const& config,
                                           Sides const& sides,
                                           Component const& comp,
                                           double phase,
                                           QuadratureSpec const& spec)
{
    auto trace_at = [&](cplx k) {
        Mat3c product = radiation_envelope(k, comp.s[0], sides.r[0])
                        * radiation_envelope(k, comp.s[1], sides.r[1])
                        * radiation_envelope(k, comp.s[2], sides.r[2]);
        return shape_product(config, k) * product.trace() * std::exp(1i * k * phase);
    };
    double K = beyond_resonances(config);
    auto segment = integrate_interval(
        ComplexIntegrand([&](double k) { return trace_at(k); }), 0.0, K, spec);
    auto tail = integrate_semi_infinite(
        ComplexIntegrand([&](double u) { return -1i * trace_at(cplx(K, -u)); }),
        1 / std::abs(phase),
        spec);
    return {segment.value + tail.value,
            segment.error_estimate + tail.error_estimate,
            segment.evaluations + tail.evaluations,
            segment.converged && tail.converged};
}

// Sum of coef * integral over k of alpha(k) Tr(F_s F_s F_s) (alpha0 removed)
Accumulated evaluate_components(AtomConfig const& config,
                                Sides const& sides,
                                std::vector<Component> const& comps,
                                QuadratureSpec const& spec)
{
    require_pole_free_axis(config);
    bool rotate_down = all_static(config);
    double longest = std::max({sides.d[0], sides.d[1], sides.d[2]});

    Accumulated acc;
    std::map<Pattern, cplx> rotated;
    std::vector<std::pair<Component, double>> bent;
    for (auto const& comp : comps)
    {
        if (comp.coef == 0.0)
            continue;
        double phase = comp.s[0] * sides.d[0] + comp.s[1] * sides.d[1]
                       + comp.s[2] * sides.d[2];
        int dir = phase > 0 ? 1 : -1;
        if (std::abs(phase) <= kPhaseEpsilon * longest)
        {
            // Collinear atoms: a vanishing phase can only cancel against its
            // mirror component, so both are rotated the same way and merged
            if (!rotate_down)
            {
                acc.converged = false;
                acc.error = kInf;
                continue;
            }
            dir = comp.s[0];
        }
        if (dir > 0 || rotate_down)
        {
            // k = dir * i u turns e^{i s k x} into e^{-(s dir) u x}
            Pattern t{comp.s[0] * dir, comp.s[1] * dir, comp.s[2] * dir};
            rotated[t] += comp.coef * cplx(0, dir);
        }
        else
        {
            bent.emplace_back(comp, phase);
        }
    }
    for (auto const& [pattern, coef] : rotated)
    {
        if (coef == 0.0)
            continue;  // exact cancellation between phase components
        auto r = pattern_integral(config, sides, pattern, spec);
        acc.value += coef * r.value;
        acc.error += std::abs(coef) * r.error_estimate;
        acc.converged = acc.converged && r.converged;
    }
    for (auto const& [comp, phase] : bent)
    {
        auto r = bent_contour_integral(config, sides, comp, phase, spec);
        acc.value += comp.coef * r.value;
        acc.error += std::abs(comp.coef) * r.error_estimate;
        acc.converged = acc.converged && r.converged;
    }
    return acc;
}

// Phase components of delta_E_C at time ct, signs ordered (alpha, beta, gamma)
std::vector<Component> response_components(CausalRegion const& region,
                                           TriangleGeometry const& g,
                                           double ct,
                                           double sigma,
                                           double eps)
{
    // Im part of e^{ikx}: (F_+ - F_-) / 2i
    cplx const half_im = 1.0 / 2i;
    std::vector<Component> out;

    double w = step(region.margin_beta, eps) * step(region.margin_alpha, eps);
    if (w != 0)
    {
        out.push_back({{-1, +1, +1}, w * half_im});
        out.push_back({{-1, +1, -1}, -w * half_im});
    }

    // Double scattering through atom A (beta path) and through B (alpha path)
    for (int path : {1, 0})
    {
        double x = path == 1 ? g.beta : g.alpha;
        double margin = path == 1 ? region.margin_beta : region.margin_alpha;
        double wt = step(margin, eps);
        if (wt == 0)
            continue;
        double c_out = 0.5 * (1 - sign(g.gamma + x - ct, eps));
        double c_in = 0.5 * (1 - sign(g.gamma - x + ct, eps));
        for (auto [cc, sg] : {std::pair{c_out, +1}, std::pair{c_in, -1}})
        {
            if (cc == 0)
                continue;
            for (int partner : {+1, -1})
            {
                Component comp;
                comp.s[path] = +1;
                comp.s[1 - path] = partner;
                comp.s[2] = sg;
                comp.coef = sigma * wt * cc * double(partner) * half_im;
                out.push_back(comp);
            }
        }
    }
    return out;
}

void check_time(double ct)
{
    if (!(ct >= 0) || !std::isfinite(ct))
    {
        throw InvalidArgument("ct must be finite and non-negative");
    }
}

void add_geometry_warnings(PotentialResult& r, TriangleGeometry const& g)
{
    if (g.collinear)
        r.warnings.push_back("collinear");
    if (r.region.on_edge)
        r.warnings.push_back("on_light_cone");
}

// Scalar trace of (a1 + b1 P1)(a2 + b2 P2)(a3 + b3 P3) with P_i = n_i n_i
template<class S>
S projector_trace(S const& a1, S const& b1, Vec3 const& n1,
                  S const& a2, S const& b2, Vec3 const& n2,
                  S const& a3, S const& b3, Vec3 const& n3)
{
    double c12 = n1.dot(n2);
    double c13 = n1.dot(n3);
    double c23 = n2.dot(n3);
    return cplx(3) * (a1 * a2 * a3) + a2 * a3 * b1 + a1 * a3 * b2 + a1 * a2 * b3
           + a3 * b1 * b2 * cplx(c12 * c12) + a2 * b1 * b3 * cplx(c13 * c13)
           + a1 * b2 * b3 * cplx(c23 * c23) + b1 * b2 * b3 * cplx(c12 * c23 * c13);
}

// Polarizability product over alpha0 for a real or expanded wavenumber
template<class S>
S shape_product_generic(AtomConfig const& c, S const& k)
{
    S result;
    if constexpr (std::is_same_v<S, cplx>)
        result = 1.0;
    else
        result = S::constant(1.0);
    for (auto const* m : {&c.model_A, &c.model_B, &c.model_C})
    {
        if (auto const* sr = std::get_if<SingleResonanceModel>(&m->variant()))
        {
            cplx k0sq = sr->k0 * sr->k0;
            result = result * (k0sq / (k0sq - k * k - cplx(0, sr->gamma_damp) * k));
        }
    }
    return result;
}

/*!
 * Amplitudes of the space-like integrand k^3 alpha(k) Tr(F_beta F_alpha W)
 * multiplying e^{ik(beta - alpha + gamma)} and e^{ik(beta - alpha - gamma)},
 * where W is the angular integral of the projector against e^{ik.r_AB}.
 */
template<class S>
std::pair<S, S>
spacelike_amplitudes(AtomConfig const& config, TriangleGeometry const& g, S const& k)
{
    double al = g.alpha, be = g.beta, ga = g.gamma;
    S k2 = k * k;
    // F on e^{ik beta}/beta and on e^{-ik alpha}/alpha, as a delta + b nn
    S ab = k2 / cplx(be) + k * cplx(0, 1 / (be * be)) - cplx(1 / (be * be * be));
    S bb = -(k2 / cplx(be)) - k * cplx(0, 3 / (be * be)) + cplx(3 / (be * be * be));
    S aa = k2 / cplx(al) - k * cplx(0, 1 / (al * al)) - cplx(1 / (al * al * al));
    S ba = -(k2 / cplx(al)) + k * cplx(0, 3 / (al * al)) + cplx(3 / (al * al * al));

    // sin(x)/x and cos(x)/x^2 - sin(x)/x^3 split into e^{+ix} and e^{-ix} parts
    S x = k * cplx(ga);
    S inv_x = cplx(1.0) / x;
    S inv_x2 = inv_x * inv_x;
    S inv_x3 = inv_x2 * inv_x;
    cplx const half_i = 1.0 / 2i;
    S j0_out = inv_x * half_i;
    S h_out = inv_x2 * cplx(0.5) - inv_x3 * half_i;
    S j0_in = -(inv_x * half_i);
    S h_in = inv_x2 * cplx(0.5) + inv_x3 * half_i;
    cplx const four_pi = 4 * kPi;

    S pre = k2 * k * shape_product_generic(config, k);
    S t_out = projector_trace<S>(ab, bb, g.n_AC, aa, ba, g.n_BC,
                                 (j0_out + h_out) * four_pi,
                                 -((j0_out + h_out * cplx(3)) * four_pi), g.n_AB);
    S t_in = projector_trace<S>(ab, bb, g.n_AC, aa, ba, g.n_BC,
                                (j0_in + h_in) * four_pi,
                                -((j0_in + h_in * cplx(3)) * four_pi), g.n_AB);
    return {pre * t_out, pre * t_in};
}

/*!
 * Abel-regularized integral of g(k) e^{i omega k} over [K, inf) by repeated
 * integration by parts: -e^{i omega K} sum_m (-1)^m g^(m)(K) / (i omega)^(m+1).
 *
 * With a known polynomial degree the sum stops there and is exact; otherwise
 * the asymptotic sum is cut at its smallest term, which bounds the error.
 */
IntegralResult<cplx> abel_tail(TailJet const& g, double omega, double K, int degree)
{
    cplx const iw(0, omega);
    cplx r = 1.0 / iw;  // (-1)^m m! / (i omega)^(m+1)
    cplx sum = 0;
    double smallest = kInf;
    int const last = degree >= 0 ? std::min(degree, kTailOrder) : kTailOrder;
    bool decreasing = true;
    for (int m = 0; m <= last; ++m)
    {
        cplx term = g.c[m] * r;
        if (degree < 0 && m > 0 && std::abs(term) > smallest)
        {
            decreasing = false;
            break;
        }
        sum += term;
        smallest = std::min(smallest, std::abs(term));
        r *= -double(m + 1) / iw;
    }
    IntegralResult<cplx> out;
    out.value = -std::exp(iw * K) * sum;
    out.error_estimate = 1e-14 * std::abs(sum) + (degree >= 0 ? 0.0 : smallest);
    out.converged = degree >= 0 || decreasing || smallest <= 1e-12 * std::abs(sum);
    return out;
}
}  // namespace

PotentialResult delta_E_C(AtomConfig const& config,
                          double ct,
                          QuadratureSpec const& spec,
                          PotentialOptions const& options)
{
    check_time(ct);
    spec.validate();
    TriangleGeometry g = triangle_from_positions(config, options.geometry_eps);
    PotentialResult result;
    result.ct = ct;
    result.region = classify_region(g, ct, options.edge_eps);
    add_geometry_warnings(result, g);

    if (result.region.margin_beta < -options.edge_eps
        || result.region.margin_alpha < -options.edge_eps)
    {
        return result;  // C outside a light cone: exactly zero
    }

    double sigma
        = options.double_scattering == DoubleScatteringSign::same_as_single ? 1.0 : -1.0;
    auto comps = response_components(result.region, g, ct, sigma, options.edge_eps);
    Accumulated acc = evaluate_components(config, sides_of(g), comps, spec);

    double scale = alpha0_product(config) / kPi;
    result.value = -scale * acc.value.real();
    result.error_estimate = scale * acc.error;
    result.converged = acc.converged && std::isfinite(result.value);
    if (all_static(config) && result.converged
        && std::abs(acc.value.imag()) > 1e-8 * std::abs(acc.value.real()) + acc.error)
    {
        throw ImaginaryResidue("imaginary residue "
                               + std::to_string(scale * acc.value.imag()));
    }
    if (!result.converged)
        result.warnings.push_back("not_converged");
    return result;
}

PotentialResult delta_E3_symmetrized(AtomConfig const& config,
                                     double ct,
                                     QuadratureSpec const& spec,
                                     PotentialOptions const& options)
{
    AtomConfig a_responds = cycle_roles(config);
    AtomConfig b_responds = cycle_roles(a_responds);
    PotentialResult rA = delta_E_C(a_responds, ct, spec, options);
    PotentialResult rB = delta_E_C(b_responds, ct, spec, options);
    PotentialResult rC = delta_E_C(config, ct, spec, options);

    PotentialResult result = rC;
    result.warnings.clear();
    result.value = (rA.value + rB.value + rC.value) / 3;
    result.error_estimate = (rA.error_estimate + rB.error_estimate + rC.error_estimate) / 3;
    result.converged = rA.converged && rB.converged && rC.converged;
    result.breakdown = EnergyBreakdown{rA.value, rB.value, rC.value};
    add_geometry_warnings(result, triangle_from_positions(config, options.geometry_eps));
    if (!config.identical_models())
        result.warnings.push_back("non_identical_models");
    if (!result.converged)
        result.warnings.push_back("not_converged");
    return result;
}

PotentialResult delta_E3_spacelike_AB(AtomConfig const& config,
                                      double ct,
                                      QuadratureSpec const& spec,
                                      PotentialOptions const& options)
{
    check_time(ct);
    spec.validate();
    TriangleGeometry g = triangle_from_positions(config, options.geometry_eps);
    PotentialResult result;
    result.ct = ct;
    result.region = classify_region(g, ct, options.edge_eps);
    double eps = options.edge_eps;
    if (!(result.region.margin_alpha > eps && result.region.margin_beta > eps
          && result.region.margin_gamma < -eps))
    {
        throw RegionMismatch("space-like AB form requires alpha < ct, beta < ct, gamma > ct");
    }
    add_geometry_warnings(result, g);
    require_pole_free_axis(config);

    double slowest = g.gamma - std::abs(g.beta - g.alpha);
    if (!(slowest > kPhaseEpsilon * g.max_distance()))
    {
        result.value = std::numeric_limits<double>::quiet_NaN();
        result.error_estimate = kInf;
        result.converged = false;
        result.warnings.push_back("not_converged");
        return result;
    }

    // Real axis: [0, K] by quadrature, [K, inf) by the regularized tail. The
    // tail amplitude is a polynomial for static atoms; resonances need K well
    // past their poles for the tail expansion to converge.
    double K = 4 / slowest;
    int degree = 6;  // k^3 times two quadratics times 1/k
    if (!all_static(config))
    {
        K = 2 * beyond_resonances(config) + 60 / slowest;
        degree = -1;
    }
    double phase = g.beta - g.alpha;
    double al = g.alpha, be = g.beta;
    auto integrand = [&](double k) {
        // F on e^{ik beta}/beta and on e^{-ik alpha}/alpha, as a delta + b nn
        cplx ab = k * k / be + 1i * k / (be * be) - 1 / (be * be * be);
        cplx bb = -k * k / be - 3i * k / (be * be) + 3 / (be * be * be);
        cplx aa = k * k / al - 1i * k / (al * al) - 1 / (al * al * al);
        cplx ba = -k * k / al + 3i * k / (al * al) + 3 / (al * al * al);
        double x = k * g.gamma;
        double j0 = spherical_j0(x);
        double h = transverse_radial(x);
        cplx trace = projector_trace<cplx>(ab, bb, g.n_AC, aa, ba, g.n_BC,
                                           4 * kPi * (j0 + h), -4 * kPi * (j0 + 3 * h),
                                           g.n_AB);
        return (k * k * k * shape_product(config, k) * std::exp(1i * (k * phase)) * trace)
            .real();
    };
    auto finite = integrate_interval(RealIntegrand(integrand), 0.0, K, spec);

    auto [g_out, g_in] = spacelike_amplitudes<TailJet>(config, g, TailJet::variable(K));
    auto tail_out = abel_tail(g_out, phase + g.gamma, K, degree);
    auto tail_in = abel_tail(g_in, phase - g.gamma, K, degree);

    struct
    {
        double value;
        double error_estimate;
        bool converged;
    } r{finite.value + (tail_out.value + tail_in.value).real(),
        finite.error_estimate + tail_out.error_estimate + tail_in.error_estimate,
        finite.converged && tail_out.converged && tail_in.converged};

    double scale = alpha0_product(config) / (12 * kPi * kPi);
    result.value = -scale * r.value;
    result.error_estimate = scale * r.error_estimate;
    result.converged = r.converged;

    // A and B are each outside a light cone of their partners
    AtomConfig a_responds = cycle_roles(config);
    double eA = delta_E_C(a_responds, ct, spec, options).value;
    double eB = delta_E_C(cycle_roles(a_responds), ct, spec, options).value;
    result.breakdown = EnergyBreakdown{eA, eB, 3 * result.value - eA - eB};
    if (!result.converged)
        result.warnings.push_back("not_converged");
    return result;
}

PotentialResult delta_E_C_pair(AtomConfig const& config,
                               double ct,
                               QuadratureSpec const& spec,
                               PotentialOptions const& options)
{
    check_time(ct);
    spec.validate();
    TriangleGeometry g = triangle_from_positions(config, options.geometry_eps);
    PotentialResult result;
    result.ct = ct;
    result.region = classify_region(g, ct, options.edge_eps);
    double eps = options.edge_eps;
    if (!(result.region.margin_alpha < -eps && result.region.margin_beta < -eps
          && result.region.margin_gamma > eps))
    {
        throw RegionMismatch("pair form requires alpha > ct, beta > ct, gamma < ct");
    }
    add_geometry_warnings(result, g);

    double gate_alpha = 1 - sign(g.alpha - g.gamma - ct, eps);
    double gate_beta = 1 - sign(g.beta - g.gamma - ct, eps);
    std::map<Pattern, double> terms;
    if (gate_alpha != 0)
    {
        terms[{-1, +1, +1}] += gate_alpha;
        terms[{+1, +1, -1}] += gate_alpha;
    }
    if (gate_beta != 0)
    {
        terms[{+1, -1, +1}] += gate_beta;
        terms[{+1, +1, -1}] += gate_beta;
    }
    if (terms.empty())
        return result;

    Sides sides = sides_of(g);
    double sum = 0;
    double error = 0;
    bool converged = true;
    for (auto const& [pattern, coef] : terms)
    {
        auto r = pattern_integral(config, sides, pattern, spec);
        sum += coef * r.value;
        error += coef * r.error_estimate;
        converged = converged && r.converged;
    }
    double scale = alpha0_product(config) / (16 * kPi);
    result.value = -scale * sum;
    result.error_estimate = scale * error;
    result.converged = converged;
    if (!converged)
        result.warnings.push_back("not_converged");
    return result;
}

PotentialResult static_three_body(AtomConfig const& config,
                                  QuadratureSpec const& spec,
                                  PotentialOptions const& options)
{
    spec.validate();
    TriangleGeometry g = triangle_from_positions(config, options.geometry_eps);
    PotentialResult result;
    result.ct = kInf;
    result.region = classify_distances(g.alpha, g.beta, g.gamma, 0.0, options.edge_eps);
    if (g.collinear)
        result.warnings.push_back("collinear");

    auto r = pattern_integral(config, sides_of(g), {+1, +1, +1}, spec);
    double scale = alpha0_product(config) / kPi;
    result.value = -scale * r.value;
    result.error_estimate = scale * r.error_estimate;
    result.converged = r.converged;
    if (!result.converged)
        result.warnings.push_back("not_converged");
    return result;
}

PotentialResult pair_energy_gates_open(AtomConfig const& config,
                                       QuadratureSpec const& spec,
                                       PotentialOptions const& options)
{
    spec.validate();
    PotentialResult result;
    result.ct = kInf;
    std::array<double, 3> parts{};
    AtomConfig roles = config;
    for (int i = 0; i < 3; ++i)
    {
        // Roles visited: C, A, B responding
        TriangleGeometry g = triangle_from_positions(roles, options.geometry_eps);
        Sides sides = sides_of(g);
        double sum = 0;
        double error = 0;
        for (auto const& [pattern, coef] :
             {std::pair{Pattern{-1, +1, +1}, 2.0}, std::pair{Pattern{+1, -1, +1}, 2.0},
              std::pair{Pattern{+1, +1, -1}, 4.0}})
        {
            auto r = pattern_integral(roles, sides, pattern, spec);
            sum += coef * r.value;
            error += coef * r.error_estimate;
            result.converged = result.converged && r.converged;
        }
        double scale = alpha0_product(roles) / (16 * kPi);
        parts[(i + 2) % 3] = -scale * sum;
        result.error_estimate += scale * error / 3;
        roles = cycle_roles(roles);
    }
    result.value = (parts[0] + parts[1] + parts[2]) / 3;
    result.breakdown = EnergyBreakdown{parts[0], parts[1], parts[2]};
    if (!result.converged)
        result.warnings.push_back("not_converged");
    return result;
}

}  // namespace casimir3
