#include "halfzeta/polynomial.hpp"

#include <sstream>

#include "halfzeta/errors.hpp"

namespace halfzeta {

RatPoly to_rat(const IntPoly& a)
{
    std::vector<BigRat> v;
    v.reserve(a.coefficients().size());
    for (const auto& c : a.coefficients())
        v.emplace_back(c);
    return RatPoly(std::move(v));
}

IntPoly to_int(const RatPoly& a)
{
    std::vector<BigInt> v;
    v.reserve(a.coefficients().size());
    for (const auto& c : a.coefficients()) {
        if (c.get_den() != 1)
            throw domain_error("non-integral coefficient " + to_string(c));
        v.push_back(c.get_num());
    }
    return IntPoly(std::move(v));
}

IntPoly primitive_part(const RatPoly& a)
{
    if (a.is_zero())
        throw domain_error("primitive part of the zero polynomial");
    BigInt den_lcm = 1;
    for (const auto& c : a.coefficients())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<BigInt> v;
    BigInt content = 0;
    for (const auto& c : a.coefficients()) {
        BigInt n = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        v.push_back(std::move(n));
    }
    if (v.back() < 0)
        content = -content;
    for (auto& x : v)
        x /= content;
    return IntPoly(std::move(v));
}

RatDivMod divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero())
        throw domain_error("division by the zero polynomial");
    std::vector<BigRat> rem = a.coefficients();
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0)
        return {RatPoly{}, a};
    std::vector<BigRat> quo(static_cast<std::size_t>(dq) + 1);
    const BigRat& lead = b.leading();
    for (int i = dq; i >= 0; --i) {
        BigRat c = rem[static_cast<std::size_t>(i + db)] / lead;
        quo[static_cast<std::size_t>(i)] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i + j)] -= c * b.coeff(j);
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly poly_divexact(const RatPoly& a, const RatPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw domain_error("non-exact division");
    return q;
}

RatPoly poly_divexact(const IntPoly& a, const IntPoly& b)
{
    return poly_divexact(to_rat(a), to_rat(b));
}

RatPoly make_monic(const RatPoly& a)
{
    if (a.is_zero())
        return a;
    return BigRat(1 / a.leading()) * a;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b)
{
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = make_monic(r);
    }
    return make_monic(x);
}

int root_multiplicity(const RatPoly& a, const BigRat& r)
{
    if (a.is_zero())
        throw domain_error("root multiplicity undefined for the zero polynomial");
    // Repeated synthetic division by (t - r).
    std::vector<BigRat> c = a.coefficients();
    int k = 0;
    while (c.size() > 1) {
        std::vector<BigRat> q(c.size() - 1);
        BigRat acc = 0;
        for (std::size_t i = c.size(); i-- > 1;) {
            acc = acc * r + c[i];
            q[i - 1] = acc;
        }
        BigRat rem = acc * r + c[0];
        if (rem != 0)
            break;
        c = std::move(q);
        ++k;
    }
    return k;
}

int root_multiplicity(const IntPoly& a, const BigRat& r) { return root_multiplicity(to_rat(a), r); }

std::vector<RatPoly> squarefree_decomposition(const RatPoly& a)
{
    if (a.is_zero())
        throw domain_error("squarefree decomposition of the zero polynomial");
    std::vector<RatPoly> parts;
    if (a.degree() == 0)
        return parts;
    const RatPoly da = derivative(a);
    RatPoly g = gcd(a, da);
    RatPoly b = poly_divexact(a, g);
    RatPoly c = poly_divexact(da, g);
    RatPoly d = c - derivative(b);
    while (b.degree() > 0) {
        RatPoly h = gcd(b, d);
        parts.push_back(make_monic(h));
        b = poly_divexact(b, h);
        c = poly_divexact(d, h);
        d = c - derivative(b);
    }
    while (!parts.empty() && parts.back().degree() == 0)
        parts.pop_back();
    return parts;
}

std::vector<CommonFactor> squarefree_common_multiplicities(const IntPoly& f, const IntPoly& g)
{
    if (f.is_zero() || g.is_zero())
        throw domain_error("squarefree_common_multiplicities: zero polynomial input");
    const auto fp = squarefree_decomposition(to_rat(f));
    const auto gp = squarefree_decomposition(to_rat(g));
    std::vector<CommonFactor> out;
    for (std::size_t i = 0; i < fp.size(); ++i) {
        for (std::size_t j = 0; j < gp.size(); ++j) {
            RatPoly h = gcd(fp[i], gp[j]);
            if (h.degree() > 0)
                out.push_back({primitive_part(h), static_cast<int>(i) + 1, static_cast<int>(j) + 1});
        }
    }
    std::sort(out.begin(), out.end(), [](const CommonFactor& x, const CommonFactor& y) {
        if (x.factor.degree() != y.factor.degree())
            return x.factor.degree() < y.factor.degree();
        return std::lexicographical_compare(x.factor.coefficients().begin(), x.factor.coefficients().end(),
                                            y.factor.coefficients().begin(), y.factor.coefficients().end());
    });
    return out;
}

namespace {

template <class Coeff>
std::string render(const Polynomial<Coeff>& a, char var)
{
    if (a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= a.degree(); ++i) {
        Coeff c = a.coeff(i);
        if (c == 0)
            continue;
        const bool neg = c < 0;
        if (neg)
            c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (i == 0 || c != 1)
            os << c.get_str();
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

}  // namespace

std::string to_string(const IntPoly& a, char var) { return render(a, var); }
std::string to_string(const RatPoly& a, char var) { return render(a, var); }

}  // namespace halfzeta
