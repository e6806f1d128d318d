#include "halfzeta/special_values.hpp"

#include "halfzeta/errors.hpp"

namespace halfzeta {

namespace {

BigRat t0(const ZetaFunction& z) { return make_rat(1, z.order.sqrt_q()); }

bool p_ordinary(const ZetaFunction& z)
{
    if (!z.is_curve())
        return true;
    // p-rank g iff the middle coefficient is a p-adic unit.
    const BigInt mid = z.P[1].coeff(z.genus);
    return mid % z.order.p() != 0;
}

}  // namespace

int rho_of(const ZetaFunction& z)
{
    const BigRat r = t0(z);
    int rho = 0;
    for (std::size_t i = 0; i < z.P.size(); ++i) {
        const int m = root_multiplicity(z.P[i], r);
        rho += (i % 2 == 1) ? m : -m;
    }
    return rho;
}

BigRat c_of(const ZetaFunction& z)
{
    const BigRat r = t0(z);
    const IntPoly lin = IntPoly::one_minus(z.order.sqrt_q());
    BigRat c = 1;
    for (std::size_t i = 0; i < z.P.size(); ++i) {
        const int m = root_multiplicity(z.P[i], r);
        const RatPoly reduced = poly_divexact(z.P[i], pow(lin, static_cast<unsigned>(m)));
        const BigRat v = eval(reduced, r);
        if (i % 2 == 1)
            c *= v;
        else
            c /= v;
    }
    return c;
}

BigRat c_by_derivative(const ZetaFunction& z)
{
    const BigRat r = t0(z);
    IntPoly num{1}, den{1};
    for (std::size_t i = 0; i < z.P.size(); ++i)
        (i % 2 == 1 ? num : den) = (i % 2 == 1 ? num : den) * z.P[i];
    const BigRat d = eval(den, r);
    if (d == 0)
        throw domain_error("even-degree factors vanish at t = p^{-f}");
    int rho = 0;
    IntPoly deriv = num;
    while (eval(deriv, r) == 0) {
        deriv = derivative(deriv);
        ++rho;
        if (deriv.is_zero())
            throw domain_error("numerator vanishes identically");
    }
    BigInt fact = 1;
    for (int k = 2; k <= rho; ++k)
        fact *= k;
    const BigRat scale = BigRat(fact) * rpow(BigRat(-z.order.sqrt_q()), rho);
    return eval(deriv, r) / scale / d;
}

long chi_O(const ZetaFunction& z) { return z.is_curve() ? 1 - z.genus : 1; }

BigInt sha_oracle(const ZetaFunction& z)
{
    if (!z.is_curve())
        throw domain_error("sha oracle needs a curve");
    const IntPoly fJ = reverse(z.P[1], 2 * z.genus);
    BigInt v = eval(fJ, z.order.sqrt_q());
    v = abs(v);
    const BigInt scale = ipow(z.order.sqrt_q(), static_cast<unsigned long>(z.genus));
    if (v % scale != 0)
        throw identity_violation("f_J(p^f) = " + v.get_str() + " is not divisible by p^{gf} = " + scale.get_str());
    return v / scale;
}

BigInt sha_prediction(const ZetaFunction& z)
{
    if (!z.is_curve())
        throw domain_error("sha prediction needs a curve");
    if (!p_ordinary(z))
        throw domain_error("sha prediction needs an ordinary curve");
    const BigRat c = c_of(z);
    const BigRat m = abs(c) * BigRat(z.order.e_order()) *
                     rpow(BigRat(z.order.sqrt_q()), static_cast<long>(z.genus) - 1);
    if (!is_integer(m) || m <= 0)
        throw identity_violation("m = " + to_string(m) + " is not a positive integer");
    return m.get_num();
}

SpecialValueReport special_values(const ZetaFunction& z)
{
    SpecialValueReport r;
    r.rho = rho_of(z);
    r.c = c_of(z);
    r.c_squared = r.c * r.c;
    r.chi_O = chi_O(z);
    r.E_order = z.order.e_order();
    r.ordinary = p_ordinary(z);
    r.genus = z.genus;
    if (r.rho % 2 != 0)
        throw identity_violation("rho = " + std::to_string(r.rho) + " is odd");
    const BigRat alt = c_by_derivative(z);
    if (alt * alt != r.c_squared)
        throw identity_violation("c^2 paths disagree: " + to_string(r.c_squared) + " vs " + to_string(alt * alt));
    if (r.ordinary && z.is_curve())
        r.sha_prediction = sha_prediction(z);
    return r;
}

OrdinaryEllipticCheck check_ordinary_elliptic(const ZetaFunction& z, const BigInt& N1)
{
    if (!z.is_curve() || z.genus != 1)
        throw domain_error("ordinary elliptic check needs genus 1");
    if (!p_ordinary(z))
        throw domain_error("ordinary elliptic check needs an ordinary curve");
    OrdinaryEllipticCheck r;
    r.c = c_of(z);
    r.rhs = 1 - BigRat(N1) / BigRat(z.order.e_order());
    r.holds = abs(r.c) == abs(r.rhs);
    r.same_sign = r.c == r.rhs;
    return r;
}

LFunction bsd_l_function(const ZetaFunction& z, const WeilMotive& h1E)
{
    return l_function(tensor(WeilMotive::from_zeta(z), h1E));
}

BsdCheck bsd_limit_check(const ZetaFunction& z) { return bsd_limit_check(z, motive_of_E(z.order)); }

BsdCheck bsd_limit_check(const ZetaFunction& z, const WeilMotive& h1E)
{
    BsdCheck r{};
    const LFunction L = bsd_l_function(z, h1E);

    const BigRat pf(z.order.sqrt_q());
    RatPoly num{1}, den{1};
    for (std::size_t i = 0; i < z.P.size(); ++i) {
        const RatPoly scaled = scale_variable(to_rat(z.P[i]), pf);
        (i % 2 == 1 ? num : den) = (i % 2 == 1 ? num : den) * scaled * scaled;
    }
    r.rational_identity = L == LFunction(num, den);

    const BigRat u0 = make_rat(1, z.q());
    const int on = root_multiplicity(L.numerator(), u0);
    const int od = root_multiplicity(L.denominator(), u0);
    r.order = on - od;
    r.expected_order = 2 * rho_of(z);

    const RatPoly lin = RatPoly::one_minus(BigRat(z.q()));
    const RatPoly n_red = poly_divexact(L.numerator(), pow(lin, static_cast<unsigned>(on)));
    const RatPoly d_red = poly_divexact(L.denominator(), pow(lin, static_cast<unsigned>(od)));
    r.limit = eval(n_red, u0) / eval(d_red, u0);
    const BigRat c = c_of(z);
    r.c_squared = c * c;
    return r;
}

}  // namespace halfzeta
