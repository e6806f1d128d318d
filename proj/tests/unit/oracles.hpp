#pragma once

// Test-only oracles that share no code with the library paths they check.

#include <Eigen/Eigenvalues>

#include <complex>
#include <random>
#include <vector>

#include "halfzeta/polynomial.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline std::vector<long long> schoolbook(const std::vector<long long>& a, const std::vector<long long>& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    return r;
}

inline halfzeta::IntPoly int_poly(const std::vector<long long>& c)
{
    std::vector<halfzeta::BigInt> v;
    for (long long x : c)
        v.emplace_back(static_cast<long>(x));
    return halfzeta::IntPoly(v);
}

/// Inverse roots of a(t) = prod (1 - w t) via a plain companion matrix of the reversed polynomial.
inline std::vector<cplx> inverse_roots(const halfzeta::RatPoly& a)
{
    const int d = a.degree();
    if (d <= 0)
        return {};
    // reversed monic: x^d + (a_1/a_0) x^{d-1} + ... + a_d/a_0
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
    const double a0 = a.coeff(0).get_d();
    for (int i = 0; i < d; ++i)
        C(0, i) = -a.coeff(i + 1).get_d() / a0;
    for (int i = 1; i < d; ++i)
        C(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    std::vector<cplx> out;
    for (int i = 0; i < d; ++i)
        out.push_back(es.eigenvalues()[i]);
    return out;
}

inline std::vector<cplx> from_inverse_roots(const std::vector<cplx>& w)
{
    std::vector<cplx> c{1.0};
    for (const auto& x : w) {
        std::vector<cplx> n(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            n[i] += c[i];
            n[i + 1] -= x * c[i];
        }
        c = n;
    }
    return c;
}

/// Max |exact_i - numeric_i| / max(1, |exact_i|).
inline double coefficient_gap(const halfzeta::RatPoly& exact, const std::vector<cplx>& numeric)
{
    double gap = 0;
    const std::size_t n = std::max(numeric.size(), exact.coefficients().size());
    for (std::size_t i = 0; i < n; ++i) {
        const double e = exact.coeff(static_cast<int>(i)).get_d();
        const cplx v = i < numeric.size() ? numeric[i] : cplx(0.0);
        gap = std::max(gap, std::abs(v - e) / std::max(1.0, std::abs(e)));
    }
    return gap;
}

/// Random monic-free inverse-root polynomial prod (1 - r_i t) with small integer r_i.
inline std::vector<long long> random_integer_roots(std::mt19937_64& rng, int n, int span)
{
    std::vector<long long> r;
    for (int i = 0; i < n; ++i)
        r.push_back(static_cast<long long>(rng() % static_cast<unsigned>(2 * span + 1)) - span);
    return r;
}

inline halfzeta::IntPoly poly_from_int_roots(const std::vector<long long>& r)
{
    halfzeta::IntPoly p{halfzeta::BigInt(1)};
    for (long long x : r)
        p = p * halfzeta::IntPoly{halfzeta::BigInt(1), halfzeta::BigInt(static_cast<long>(-x))};
    return p;
}

}  // namespace oracle
