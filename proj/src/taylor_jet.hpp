#pragma once

#include <array>
#include <complex>

namespace casimir3::detail
{
/*!
 * Truncated Taylor expansion of a complex function about a point.
 *
 * c[m] holds g^(m)(x0) / m!. Arithmetic follows the usual Cauchy rules, so
 * evaluating an expression on Jet::variable(x0) yields the expansion of the
 * expression. Complex coefficients are needed for the damped resonance
 * denominators, which rules out real-only autodiff types.
 */
template<int N>
struct Jet
{
    using cplx = std::complex<double>;
    std::array<cplx, N + 1> c{};

    static Jet constant(cplx v)
    {
        Jet j;
        j.c[0] = v;
        return j;
    }
    static Jet variable(double x0)
    {
        Jet j;
        j.c[0] = x0;
        j.c[1] = 1.0;
        return j;
    }

    friend Jet operator+(Jet a, Jet const& b)
    {
        for (int i = 0; i <= N; ++i)
            a.c[i] += b.c[i];
        return a;
    }
    friend Jet operator-(Jet a, Jet const& b)
    {
        for (int i = 0; i <= N; ++i)
            a.c[i] -= b.c[i];
        return a;
    }
    friend Jet operator-(Jet a)
    {
        for (auto& x : a.c)
            x = -x;
        return a;
    }
    friend Jet operator*(Jet const& a, Jet const& b)
    {
        Jet r;
        for (int i = 0; i <= N; ++i)
        {
            if (a.c[i] == 0.0)
                continue;
            for (int j = 0; i + j <= N; ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        }
        return r;
    }
    friend Jet operator/(Jet const& a, Jet const& b)
    {
        Jet q;
        for (int m = 0; m <= N; ++m)
        {
            cplx s = a.c[m];
            for (int j = 1; j <= m; ++j)
                s -= b.c[j] * q.c[m - j];
            q.c[m] = s / b.c[0];
        }
        return q;
    }
    friend Jet operator*(cplx s, Jet a)
    {
        for (auto& x : a.c)
            x *= s;
        return a;
    }
    friend Jet operator*(Jet a, cplx s) { return s * a; }
    friend Jet operator+(Jet a, cplx s)
    {
        a.c[0] += s;
        return a;
    }
    friend Jet operator+(cplx s, Jet a) { return a + s; }
    friend Jet operator-(cplx s, Jet const& a) { return s + (-a); }
    friend Jet operator-(Jet a, cplx s)
    {
        a.c[0] -= s;
        return a;
    }
    friend Jet operator/(Jet a, cplx s)
    {
        for (auto& x : a.c)
            x /= s;
        return a;
    }
    friend Jet operator/(cplx s, Jet const& a) { return constant(s) / a; }
};

}  // namespace casimir3::detail
