#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace halfzeta {

using BigInt = mpz_class;
/// mpq_class is kept canonical (lowest terms, positive denominator) by every
/// operation in this library; see make_rat().
using BigRat = mpq_class;

/// Builds num/den in lowest terms. Throws domain_error if den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den = 1);

/// "num/den" with den > 0, including "n/1" for integers.
std::string to_string(const BigRat& r);
std::string to_string(const BigInt& n);

/// Accepts "n", "-n", "n/d". Throws input_error on anything else or d == 0.
BigRat parse_rat(std::string_view text);

BigInt ipow(const BigInt& base, unsigned long exp);
BigRat rpow(const BigRat& base, long exp);

/// p-adic valuation; throws domain_error on zero.
long ord_p(const BigInt& n, unsigned long p);
long ord_p(const BigRat& r, unsigned long p);

/// Deterministic trial division; intended for desk-scale primes.
bool is_prime(std::uint64_t n);

std::int64_t to_int64(const BigInt& n);
bool is_integer(const BigRat& r);

/// Order of a finite field q = p^{2f}: the only fields on which the
/// half-integral theory is rational. sqrt_q() = p^f is an integer.
class SquareOrder {
public:
    SquareOrder(std::uint32_t p, int f);

    /// Throws input_error("q must be p^{2f}") unless q is an even prime power.
    static SquareOrder from_q(const BigInt& q);

    std::uint32_t p() const { return p_; }
    int f() const { return f_; }
    BigInt q() const { return ipow(BigInt(p_), 2UL * static_cast<unsigned long>(f_)); }
    BigInt sqrt_q() const { return ipow(BigInt(p_), static_cast<unsigned long>(f_)); }
    /// [E(F_q)] = (p^f - 1)^2 for the type-(c) curve.
    BigInt e_order() const { BigInt s = sqrt_q() - 1; return s * s; }

    friend bool operator==(const SquareOrder&, const SquareOrder&) = default;

private:
    std::uint32_t p_;
    int f_;
};

}  // namespace halfzeta
