#include "casimir3/modesum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "casimir3/errors.hpp"

namespace casimir3
{
namespace
{
constexpr double kPi = std::numbers::pi;

/*!
 * Run fn(n_x, partial) for every x-slice of the mode cube and reduce the
 * partials in slice order, so results do not depend on the thread count.
 */
template<class Acc, class MakeAcc, class Fn, class Merge>
Acc reduce_slices(BoxSpec const& box, int threads, MakeAcc make, Fn fn, Merge merge)
{
    int const slices = 2 * box.n_max + 1;
    std::vector<Acc> partial;
    partial.reserve(slices);
    for (int i = 0; i < slices; ++i)
        partial.push_back(make());

    int workers = std::clamp(threads, 1, slices);
    auto work = [&](int w) {
        for (int i = w; i < slices; i += workers)
            fn(i - box.n_max, partial[i]);
    };
    if (workers == 1)
    {
        work(0);
    }
    else
    {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }
    Acc total = make();
    for (auto const& p : partial)
        merge(total, p);
    return total;
}

//! Calls fn(k_vec, k) for every retained mode in the slice n_x
template<class Fn>
void for_each_mode_in_slice(BoxSpec const& box, int nx, Fn&& fn)
{
    double const dk = 2 * kPi / box.L;
    double const kmax = box.k_max() * (1 + 1e-12);
    for (int ny = -box.n_max; ny <= box.n_max; ++ny)
    {
        for (int nz = -box.n_max; nz <= box.n_max; ++nz)
        {
            if (nx == 0 && ny == 0 && nz == 0)
                continue;
            Vec3 kvec(dk * nx, dk * ny, dk * nz);
            double k = kvec.norm();
            if (box.spherical_cutoff && k > kmax)
                continue;
            fn(kvec, k);
        }
    }
}

struct ShellAccumulator
{
    long modes{0};
    std::vector<Mat3> projector;
    std::vector<double> phase;
};

// Per-shell sums of P(k) cos(k.r_j) and cos(k.r_j) for several vectors
std::vector<ShellAccumulator> accumulate_shells(BoxSpec const& box,
                                                std::vector<Vec3> const& rs,
                                                double width,
                                                int threads)
{
    if (!(width > 0))
        throw InvalidArgument("k_bin_width must be positive");
    std::size_t nshell = static_cast<std::size_t>(std::floor(box.k_max() / width + 1e-9));
    auto make = [&] {
        std::vector<ShellAccumulator> acc(nshell);
        for (auto& s : acc)
        {
            s.projector.assign(rs.size(), Mat3::Zero());
            s.phase.assign(rs.size(), 0.0);
        }
        return acc;
    };
    auto fn = [&](int nx, std::vector<ShellAccumulator>& acc) {
        for_each_mode_in_slice(box, nx, [&](Vec3 const& kvec, double k) {
            auto s = static_cast<std::size_t>(k / width);
            if (s >= nshell)
                return;
            Mat3 P = transverse_projector(kvec / k);
            auto& shell = acc[s];
            ++shell.modes;
            for (std::size_t j = 0; j < rs.size(); ++j)
            {
                double c = std::cos(kvec.dot(rs[j]));
                shell.projector[j] += c * P;
                shell.phase[j] += c;
            }
        });
    };
    auto merge = [](std::vector<ShellAccumulator>& total,
                    std::vector<ShellAccumulator> const& part) {
        for (std::size_t s = 0; s < total.size(); ++s)
        {
            total[s].modes += part[s].modes;
            for (std::size_t j = 0; j < total[s].phase.size(); ++j)
            {
                total[s].projector[j] += part[s].projector[j];
                total[s].phase[j] += part[s].phase[j];
            }
        }
    };
    return reduce_slices<std::vector<ShellAccumulator>>(box, threads, make, fn, merge);
}
}  // namespace

long BoxSpec::mode_count() const
{
    long side = 2L * n_max + 1;
    return side * side * side - 1;
}

double BoxSpec::k_max() const
{
    return 2 * kPi * n_max / L;
}

void BoxSpec::validate() const
{
    if (!(L > 0) || !std::isfinite(L))
        throw InvalidArgument("box side must be positive");
    if (n_max < 1)
        throw InvalidArgument("n_max must be at least 1");
    if (soft_cutoff && !(*soft_cutoff >= 0))
        throw InvalidArgument("soft cutoff must be non-negative");
}

Mat3 polarization_sum(Vec3 const& k_hat)
{
    // Start from the coordinate axis least aligned with k_hat
    Eigen::Index axis;
    k_hat.cwiseAbs().minCoeff(&axis);
    Vec3 a = Vec3::Unit(axis);
    Vec3 e1 = (a - a.dot(k_hat) * k_hat).normalized();
    Vec3 e2 = k_hat.cross(e1).normalized();
    return e1 * e1.transpose() + e2 * e2.transpose();
}

Mat3 box_free_correlation(BoxSpec const& box, Vec3 const& r1, Vec3 const& r2, int threads)
{
    box.validate();
    Vec3 r = r1 - r2;
    if (!(r.norm() >= std::max(kGeometryEpsilon, box.L / (2.0 * box.n_max))))
    {
        throw CoincidentPoints("correlation points closer than the box resolution");
    }
    double eta = box.soft_cutoff.value_or(0.0);
    double norm = 2 * kPi / (box.L * box.L * box.L);
    auto fn = [&](int nx, Mat3& acc) {
        for_each_mode_in_slice(box, nx, [&](Vec3 const& kvec, double k) {
            double w = norm * k * std::cos(kvec.dot(r)) * std::exp(-eta * k);
            acc += w * transverse_projector(kvec / k);
        });
    };
    Mat3 total = reduce_slices<Mat3>(
        box, threads, [] { return Mat3(Mat3::Zero()); }, fn, [](Mat3& t, Mat3 const& p) {
            t += p;
        });
    return 0.5 * (total + total.transpose());
}

ContinuumCorrelation
continuum_free_correlation(Vec3 const& r, double eta, double k_max, QuadratureSpec const& spec)
{
    double R = r.norm();
    if (!(R > kGeometryEpsilon))
        throw CoincidentPoints("continuum correlation at zero separation");
    auto j0 = integrate_interval(
        RealIntegrand(
            [&](double k) { return k * k * k * spherical_j0(k * R) * std::exp(-eta * k); }),
        0.0, k_max, spec);
    auto h = integrate_interval(
        RealIntegrand(
            [&](double k) { return k * k * k * transverse_radial(k * R) * std::exp(-eta * k); }),
        0.0, k_max, spec);
    Mat3 nn = (r / R) * (r / R).transpose();
    Mat3 value = ((Mat3::Identity() - nn) * j0.value
                  + (Mat3::Identity() - 3 * nn) * h.value)
                 / kPi;
    return {value, (j0.error_estimate + 2 * h.error_estimate) / kPi,
            j0.converged && h.converged};
}

double free_correlation_deviation(BoxSpec const& box, Vec3 const& r, int threads)
{
    Mat3 discrete = box_free_correlation(box, r, Vec3::Zero(), threads);
    double k_max = box.spherical_cutoff ? box.k_max() : std::sqrt(3.0) * box.k_max();
    auto cont = continuum_free_correlation(r, box.soft_cutoff.value_or(0.0), k_max);
    return (discrete - cont.value).cwiseAbs().maxCoeff() / cont.value.cwiseAbs().maxCoeff();
}

std::vector<ShellSums>
box_shell_sums(BoxSpec const& box, Vec3 const& r, double k_bin_width, int threads)
{
    box.validate();
    auto acc = accumulate_shells(box, {r}, k_bin_width, threads);
    std::vector<ShellSums> out;
    for (std::size_t s = 0; s < acc.size(); ++s)
    {
        if (acc[s].modes == 0)
            continue;
        double kc = (s + 0.5) * k_bin_width;
        double n = static_cast<double>(acc[s].modes);
        out.push_back({kc, acc[s].modes, acc[s].projector[0],
                       n / (4 * kPi) * angular_projector_integral(kc, r), acc[s].phase[0],
                       n * spherical_j0(kc * r.norm())});
    }
    return out;
}

ReducedIntegrandReport box_reduced_integrand_check(BoxSpec const& box,
                                                   TriangleGeometry const& geom,
                                                   double k_bin_width,
                                                   int threads)
{
    box.validate();
    if (!(geom.max_distance() < box.L / 4))
    {
        throw GeometryTooLarge("largest atom separation must stay below L/4");
    }
    // Phase vectors paired with the scattering term they multiply
    std::vector<Vec3> rs = {geom.r_AB(), geom.r_BC(), geom.r_AC()};
    auto acc = accumulate_shells(box, rs, k_bin_width, threads);

    ReducedIntegrandReport report;
    for (std::size_t s = 0; s < acc.size(); ++s)
    {
        if (acc[s].modes == 0)
            continue;
        double kc = (s + 0.5) * k_bin_width;
        auto out = [kc](Vec3 const& r) {
            return f_tensor(KernelKind::oscillatory_out(kc), r).entries;
        };
        Mat3c Fb = out(geom.r_AC());
        Mat3c Fa = out(geom.r_BC());
        Mat3c Fg = out(geom.r_AB());
        std::array<Mat3c, 3> M = {Fb * Fa.conjugate(), Fb * Fg, Fa * Fg};

        double n = static_cast<double>(acc[s].modes);
        std::complex<double> discrete = 0;
        std::complex<double> analytic = 0;
        double magnitude = 0;
        for (std::size_t j = 0; j < 3; ++j)
        {
            discrete += (M[j] * acc[s].projector[j].cast<std::complex<double>>()).trace();
            Mat3 avg = n / (4 * kPi) * angular_projector_integral(kc, rs[j]);
            analytic += (M[j] * avg.cast<std::complex<double>>()).trace();
            magnitude += M[j].norm();
        }
        double dev = std::abs(discrete - analytic) / (n * magnitude);
        report.shells.push_back({kc, acc[s].modes, discrete.real(), analytic.real(), dev});
        report.max_deviation = std::max(report.max_deviation, dev);
        report.mean_deviation += dev;
    }
    if (!report.shells.empty())
        report.mean_deviation /= report.shells.size();
    return report;
}

}  // namespace casimir3
