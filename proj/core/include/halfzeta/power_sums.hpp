#pragma once

#include <vector>

#include "halfzeta/polynomial.hpp"

namespace halfzeta {

/// Power sums s_1..s_n of the inverse roots of a = 1 + a_1 t + ... + a_d t^d,
/// i.e. s_k = sum_j omega_j^k for a = prod_j (1 - omega_j t).
/// Requires constant term 1.
std::vector<BigRat> inverse_root_power_sums(const RatPoly& a, int n);
std::vector<BigInt> inverse_root_power_sums(const IntPoly& a, int n);

/// Inverse-root polynomial of the given degree whose first `degree` power
/// sums are s (Newton's identities, exact over Q).
RatPoly from_power_sums(const std::vector<BigRat>& s, int degree);

/// Zeta-numerator style reconstruction: s holds the first ceil(degree/2)
/// power sums, the remaining coefficients come from the functional equation
/// a_{d-i} = q^{w(d-2i)/2} a_i. Throws certification_error when a
/// coefficient is not an integer (inconsistent counts) and domain_error when
/// w*d is odd.
IntPoly newton_coeffs_from_power_sums(const std::vector<BigInt>& s, int degree, const BigInt& q, int weight);

/// Polynomial whose inverse roots are all pairwise products of inverse roots
/// of f and of g, with multiplicity. Both inputs need constant term 1.
RatPoly tensor_roots(const RatPoly& f, const RatPoly& g);
IntPoly tensor_roots(const IntPoly& f, const IntPoly& g);

/// Polynomial whose inverse roots are the products over k-element subsets of
/// the inverse roots of f. Requires 0 <= k <= deg f and constant term 1.
RatPoly exterior_power(const RatPoly& f, int k);
IntPoly exterior_power(const IntPoly& f, int k);

}  // namespace halfzeta
