#include "halfzeta/numeric_roots.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "halfzeta/errors.hpp"

namespace halfzeta {

namespace {

using cld = std::complex<long double>;

std::vector<std::complex<double>> squarefree_roots(const RatPoly& monic)
{
    const int n = monic.degree();
    std::vector<std::complex<double>> roots;
    if (n <= 0)
        return roots;
    std::vector<long double> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] = static_cast<long double>(monic.coeff(i).get_d());

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i)
        companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i)
        companion(i, n - 1) = -static_cast<double>(c[static_cast<std::size_t>(i)]);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    const auto ev = solver.eigenvalues();

    for (int k = 0; k < n; ++k) {
        cld z(ev(k).real(), ev(k).imag());
        for (int it = 0; it < 8; ++it) {
            cld val = 0, der = 0;
            for (int i = n; i >= 0; --i) {
                der = der * z + val;
                val = val * z + c[static_cast<std::size_t>(i)];
            }
            if (std::abs(der) == 0)
                break;
            const cld step = val / der;
            z -= step;
            if (std::abs(step) <= 1e-19L * std::max<long double>(1, std::abs(z)))
                break;
        }
        roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
    return roots;
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(const RatPoly& a)
{
    if (a.is_zero())
        throw domain_error("roots of the zero polynomial");
    std::vector<std::complex<double>> out;
    const auto parts = squarefree_decomposition(a);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& r : squarefree_roots(parts[i]))
            out.insert(out.end(), i + 1, r);
    return out;
}

std::vector<std::complex<double>> numeric_inverse_roots(const RatPoly& a)
{
    if (a.is_zero() || a.coeff(0) == 0)
        throw domain_error("inverse roots need a nonzero constant term");
    return numeric_roots(reverse(a));
}

ModulusCheck check_inverse_root_modulus(const RatPoly& a, double expected, double tol)
{
    ModulusCheck r;
    for (const auto& w : numeric_inverse_roots(a)) {
        const double dev = std::abs(std::abs(w) - expected) / expected;
        r.max_relative_deviation = std::max(r.max_relative_deviation, dev);
    }
    r.passed = r.max_relative_deviation <= tol;
    return r;
}

}  // namespace halfzeta
