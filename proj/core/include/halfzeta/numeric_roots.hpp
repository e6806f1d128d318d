#pragma once

#include <complex>
#include <vector>

#include "halfzeta/polynomial.hpp"

namespace halfzeta {

/// Complex roots of a nonzero polynomial, with multiplicity. Each squarefree
/// part (Yun) goes through companion-matrix eigenvalues and is then polished
/// by Newton steps in long double. Diagnostics only: never feeds exact output.
std::vector<std::complex<double>> numeric_roots(const RatPoly& a);

/// Inverse roots omega_j of a = prod (1 - omega_j t), a(0) != 0.
std::vector<std::complex<double>> numeric_inverse_roots(const RatPoly& a);

struct ModulusCheck {
    double max_relative_deviation = 0.0;
    bool passed = true;
};

/// Checks | |omega_j| - expected | / expected <= tol for every inverse root.
ModulusCheck check_inverse_root_modulus(const RatPoly& a, double expected, double tol = 1e-9);

}  // namespace halfzeta
