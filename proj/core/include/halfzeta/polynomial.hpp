#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "halfzeta/rational.hpp"

namespace halfzeta {

/// Dense univariate polynomial, coefficient i multiplies the i-th power of
/// the variable. No trailing zeros are ever stored, so the zero polynomial
/// has an empty coefficient vector and degree zero_degree.
///
/// The library uses two variable conventions and never mixes them: zeta
/// numerators are polynomials in t with constant term 1 (inverse-root form),
/// Frobenius characteristic polynomials are monic in x. reverse() converts.
template <class Coeff>
class Polynomial {
public:
    static constexpr int zero_degree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }
    static Polynomial monomial(Coeff c, int deg)
    {
        std::vector<Coeff> v(static_cast<std::size_t>(deg) + 1);
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }
    /// 1 - root*t: the inverse-root factor for one Frobenius eigenvalue.
    static Polynomial one_minus(const Coeff& root) { return Polynomial{Coeff(1), Coeff(-root)}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Coeff>& coefficients() const { return c_; }
    Coeff coeff(int i) const
    {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Coeff(0);
    }
    const Coeff& leading() const { return c_.back(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& x : r.c_)
            x = -x;
        return r;
    }
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<Coeff> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = (i < a.c_.size() ? a.c_[i] : Coeff(0)) + (i < b.c_.size() ? b.c_[i] : Coeff(0));
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Coeff> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Coeff& s, const Polynomial& a)
    {
        std::vector<Coeff> v = a.c_;
        for (auto& x : v)
            x *= s;
        return Polynomial(std::move(v));
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<BigRat>;

RatPoly to_rat(const IntPoly& a);
/// Throws domain_error if any coefficient is not an integer.
IntPoly to_int(const RatPoly& a);
/// Scales a nonzero rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
IntPoly primitive_part(const RatPoly& a);

template <class Coeff>
Polynomial<Coeff> pow(const Polynomial<Coeff>& a, unsigned n)
{
    Polynomial<Coeff> r = Polynomial<Coeff>::constant(Coeff(1));
    for (unsigned i = 0; i < n; ++i)
        r = r * a;
    return r;
}

/// x^n a(1/x). n defaults to deg a.
template <class Coeff>
Polynomial<Coeff> reverse(const Polynomial<Coeff>& a, int n = -1)
{
    if (n < 0)
        n = a.degree();
    std::vector<Coeff> v(static_cast<std::size_t>(std::max(n, 0)) + 1);
    for (int i = 0; i <= a.degree(); ++i)
        v[static_cast<std::size_t>(n - i)] = a.coeff(i);
    return Polynomial<Coeff>(std::move(v));
}

/// a(c t).
template <class Coeff>
Polynomial<Coeff> scale_variable(const Polynomial<Coeff>& a, const Coeff& c)
{
    std::vector<Coeff> v = a.coefficients();
    Coeff power = 1;
    for (auto& x : v) {
        x *= power;
        power *= c;
    }
    return Polynomial<Coeff>(std::move(v));
}

template <class Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& a)
{
    std::vector<Coeff> v;
    for (int i = 1; i <= a.degree(); ++i)
        v.push_back(Coeff(i) * a.coeff(i));
    return Polynomial<Coeff>(std::move(v));
}

template <class Coeff, class Value>
Value eval(const Polynomial<Coeff>& a, const Value& x)
{
    Value acc = 0;
    for (int i = a.degree(); i >= 0; --i)
        acc = acc * x + Value(a.coeff(i));
    return acc;
}

struct RatDivMod {
    RatPoly quotient;
    RatPoly remainder;
};

/// Euclidean division over Q. Throws domain_error on a zero divisor.
RatDivMod divmod(const RatPoly& a, const RatPoly& b);

/// Exact quotient a/b over Q; throws domain_error("non-exact division") when
/// b does not divide a.
RatPoly poly_divexact(const RatPoly& a, const RatPoly& b);
RatPoly poly_divexact(const IntPoly& a, const IntPoly& b);

/// Monic gcd over Q (zero if both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly make_monic(const RatPoly& a);

/// Largest k with (t - r)^k | a. Throws domain_error for the zero polynomial.
int root_multiplicity(const IntPoly& a, const BigRat& r);
int root_multiplicity(const RatPoly& a, const BigRat& r);

/// Yun decomposition: a = c * prod_i parts[i]^(i+1), each part monic,
/// squarefree and pairwise coprime (parts may be 1).
std::vector<RatPoly> squarefree_decomposition(const RatPoly& a);

struct CommonFactor {
    IntPoly factor;  ///< squarefree, primitive, positive leading coefficient
    int mult_f;
    int mult_g;

    friend bool operator==(const CommonFactor&, const CommonFactor&) = default;
};

/// Splits the radical of gcd(f, g) into squarefree pieces on which the
/// multiplicities in f and in g are constant. No irreducible factorization is
/// performed. Sum of deg(h)*mult_f*mult_g is the common-root pair count.
std::vector<CommonFactor> squarefree_common_multiplicities(const IntPoly& f, const IntPoly& g);

std::string to_string(const IntPoly& a, char var = 't');
std::string to_string(const RatPoly& a, char var = 't');

}  // namespace halfzeta
