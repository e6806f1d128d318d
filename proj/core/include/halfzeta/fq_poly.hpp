#pragma once

#include <cstdint>
#include <vector>

#include "halfzeta/finite_field.hpp"

namespace halfzeta {

/// Dense polynomial over one FiniteField, coefficients low to high, trimmed.
class FqPoly {
public:
    using Index = FiniteField::Index;

    explicit FqPoly(FieldRef field, std::vector<Index> coeffs = {});

    const FieldRef& field() const { return field_; }
    const std::vector<Index>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Index coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : 0; }
    Index leading() const { return c_.empty() ? 0 : c_.back(); }

    Index eval(Index x) const;
    FqPoly derivative() const;
    FqPoly monic() const;

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
    friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }

private:
    void trim();

    FieldRef field_;
    std::vector<Index> c_;
};

struct FqDivMod {
    FqPoly quotient;
    FqPoly remainder;
};

/// Throws domain_error on a zero divisor.
FqDivMod divmod(const FqPoly& a, const FqPoly& b);
/// Monic gcd; zero only if both inputs are zero.
FqPoly gcd(const FqPoly& a, const FqPoly& b);
/// base^e mod m, m nonzero.
FqPoly powmod(const FqPoly& base, std::uint64_t e, const FqPoly& m);

/// Number of distinct roots of a nonzero g in its coefficient field:
/// deg gcd(g, y^Q - y). Small fields are scanned directly.
int count_distinct_roots(const FqPoly& g);

/// Maps every coefficient through the canonical embedding into target.
FqPoly embed(const FqPoly& a, const FieldRef& target);

}  // namespace halfzeta
