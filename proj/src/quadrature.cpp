#include "casimir3/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

#include "casimir3/errors.hpp"

namespace casimir3
{
namespace
{
// Kronrod 21-point abscissae and weights with the embedded 10-point Gauss
// rule (odd-indexed abscissae)
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208292085040, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

template<class T>
struct Panel
{
    double a;
    double b;
    T value;
    double truncation;  // |Kronrod - Gauss|
    double rounding;    // floating-point bound from the absolute weighted sum

    // A panel whose rule difference is at the rounding level cannot improve
    bool saturated() const { return truncation <= 25 * rounding; }
    double priority() const { return std::max(truncation, rounding); }
};

template<class T>
Panel<T> gauss_kronrod(std::function<T(double)> const& g, double a, double b)
{
    double center = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    T fc = g(center);
    T kronrod = fc * kWgk[10];
    T gauss{};
    double resabs = std::abs(fc) * kWgk[10];
    for (int j = 0; j < 10; ++j)
    {
        double dx = half * kXgk[j];
        T f1 = g(center - dx);
        T f2 = g(center + dx);
        kronrod += (f1 + f2) * kWgk[j];
        resabs += (std::abs(f1) + std::abs(f2)) * kWgk[j];
        if (j % 2 == 1)
        {
            gauss += (f1 + f2) * kWg[j / 2];
        }
    }
    Panel<T> p{a, b, kronrod * half, std::abs(kronrod - gauss) * std::abs(half),
               2 * kEps * resabs * std::abs(half)};
    if (!std::isfinite(std::abs(p.value)) || !std::isfinite(resabs))
    {
        p.truncation = std::numeric_limits<double>::infinity();
    }
    return p;
}

template<class T>
struct ByPriority
{
    bool operator()(Panel<T> const& x, Panel<T> const& y) const
    {
        return x.priority() < y.priority();
    }
};

//! Global adaptive bisection over a set of initial panels of g
template<class T>
IntegralResult<T> adaptive(std::function<T(double)> const& g,
                           std::vector<std::pair<double, double>> const& initial,
                           QuadratureSpec const& spec)
{
    spec.validate();
    std::priority_queue<Panel<T>, std::vector<Panel<T>>, ByPriority<T>> heap;
    std::vector<Panel<T>> done;
    IntegralResult<T> result;
    long panels = 0;
    T value{};
    double error = 0;
    auto add = [&](Panel<T> const& p) {
        value += p.value;
        error += p.truncation + p.rounding;
        if (p.saturated())
            done.push_back(p);
        else
            heap.push(p);
        ++panels;
        result.evaluations += 21;
    };
    for (auto [a, b] : initial)
    {
        add(gauss_kronrod(g, a, b));
    }

    while (!heap.empty() && std::isfinite(error)
           && error > std::max(spec.rel_tol * std::abs(value), spec.abs_tol)
           && panels < spec.max_subdivisions)
    {
        Panel<T> worst = heap.top();
        double mid = 0.5 * (worst.a + worst.b);
        heap.pop();
        if (!(mid > worst.a && mid < worst.b))
        {
            done.push_back(worst);  // cannot be split in floating point
            continue;
        }
        value -= worst.value;
        error -= worst.truncation + worst.rounding;
        --panels;
        add(gauss_kronrod(g, worst.a, mid));
        add(gauss_kronrod(g, mid, worst.b));
    }

    // Final sums in a fixed order for reproducibility
    while (!heap.empty())
    {
        done.push_back(heap.top());
        heap.pop();
    }
    std::sort(done.begin(), done.end(), [](auto const& x, auto const& y) {
        return x.a < y.a;
    });
    result.value = T{};
    result.error_estimate = 0;
    for (auto const& p : done)
    {
        result.value += p.value;
        result.error_estimate += p.truncation + p.rounding;
    }
    double target = std::max(spec.rel_tol * std::abs(result.value), spec.abs_tol);
    result.converged = std::isfinite(result.error_estimate) && result.error_estimate <= target;
    return result;
}

template<class T>
IntegralResult<T> semi_infinite(std::function<T(double)> const& f,
                                double d,
                                QuadratureSpec const& spec)
{
    if (!(d > 0) || !std::isfinite(d))
    {
        throw InvalidArgument("decay scale must be positive and finite");
    }
    double split = 40 * d;
    // Finite part on [0, split] and the tail on t in [split, split + 1)
    std::function<T(double)> g = [&f, d, split](double x) -> T {
        if (x <= split)
        {
            return f(x);
        }
        double t = x - split;
        double s = 1 - t;
        T v = f(split + d * t / s);
        if (v == T{})
        {
            return v;
        }
        return v * (d / (s * s));
    };
    std::vector<std::pair<double, double>> initial
        = {{0, d}, {d, 3 * d}, {3 * d, 10 * d}, {10 * d, split}, {split, split + 1}};
    return adaptive(g, initial, spec);
}
}  // namespace

void QuadratureSpec::validate() const
{
    if (!(rel_tol > 0) || !(abs_tol > 0))
    {
        throw InvalidArgument("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 1)
    {
        throw InvalidArgument("max_subdivisions must be at least 1");
    }
    if (extrapolation_order < 1)
    {
        throw InvalidArgument("extrapolation_order must be at least 1");
    }
    if (!(extrapolation_rel_tol > 0))
    {
        throw InvalidArgument("extrapolation_rel_tol must be positive");
    }
    if (eta_schedule.size() < static_cast<std::size_t>(extrapolation_order) + 1)
    {
        throw InvalidArgument("eta_schedule needs at least extrapolation_order + 1 entries");
    }
    for (std::size_t i = 0; i < eta_schedule.size(); ++i)
    {
        if (!(eta_schedule[i] > 0)
            || (i > 0 && !(eta_schedule[i] < eta_schedule[i - 1])))
        {
            throw InvalidArgument("eta_schedule must be positive and strictly decreasing");
        }
    }
}

IntegralResult<double>
integrate_interval(RealIntegrand const& f, double a, double b, QuadratureSpec const& spec)
{
    return adaptive<double>(f, {{a, b}}, spec);
}

IntegralResult<std::complex<double>>
integrate_interval(ComplexIntegrand const& f, double a, double b, QuadratureSpec const& spec)
{
    return adaptive<std::complex<double>>(f, {{a, b}}, spec);
}

IntegralResult<double>
integrate_semi_infinite(RealIntegrand const& f, double decay_scale, QuadratureSpec const& spec)
{
    return semi_infinite<double>(f, decay_scale, spec);
}

IntegralResult<std::complex<double>> integrate_semi_infinite(ComplexIntegrand const& f,
                                                             double decay_scale,
                                                             QuadratureSpec const& spec)
{
    return semi_infinite<std::complex<double>>(f, decay_scale, spec);
}

ZeroExtrapolation extrapolate_to_zero(std::vector<double> const& x,
                                      std::vector<double> const& y,
                                      std::vector<double> const& errors)
{
    ZeroExtrapolation out{0, 0, 0};
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        double l = 1;
        for (std::size_t j = 0; j < x.size(); ++j)
        {
            if (j != i)
            {
                l *= x[j] / (x[j] - x[i]);
            }
        }
        out.value += l * y[i];
        out.lebesgue += std::abs(l);
        if (i < errors.size())
            out.propagated_error += std::abs(l) * errors[i];
    }
    return out;
}

IntegralResult<double>
integrate_oscillatory_regularized(RealIntegrand const& f, QuadratureSpec const& spec)
{
    spec.validate();
    std::size_t const n = spec.eta_schedule.size();
    std::vector<double> values(n);
    std::vector<double> errors(n);
    IntegralResult<double> result;
    double scale = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        double eta = spec.eta_schedule[i];
        auto r = integrate_semi_infinite(
            RealIntegrand([&f, eta](double k) {
                double damp = std::exp(-eta * k);
                return damp == 0 ? 0.0 : f(k) * damp;
            }),
            1 / eta,
            spec);
        values[i] = r.value;
        errors[i] = r.error_estimate;
        result.evaluations += r.evaluations;
        scale = std::max(scale, std::abs(r.value));
    }

    auto window = [&](std::size_t first, std::size_t count) {
        auto slice = [first, count](std::vector<double> const& v) {
            return std::vector<double>(v.begin() + first, v.begin() + first + count);
        };
        return extrapolate_to_zero(slice(spec.eta_schedule), slice(values), slice(errors));
    };
    std::size_t m = spec.extrapolation_order + 1;
    ZeroExtrapolation last = window(n - m, m);
    ZeroExtrapolation previous = n > m ? window(n - m - 1, m) : window(n - m + 1, m - 1);

    // Convergence is judged against the extrapolation target: the individual
    // regularized integrals may be limited by cancellation in f
    double difference = std::abs(last.value - previous.value);
    double target = std::max(spec.extrapolation_rel_tol * scale, spec.abs_tol);
    result.value = last.value;
    result.error_estimate = difference + last.propagated_error;
    result.converged = std::isfinite(result.error_estimate) && result.error_estimate <= target;
    if (difference > 10 * target)
    {
        throw ExtrapolationUnstable("successive extrapolants differ by "
                                    + std::to_string(difference) + " (target "
                                    + std::to_string(target) + ")");
    }
    return result;
}

}  // namespace casimir3
