#include "halfzeta/power_sums.hpp"

#include "halfzeta/errors.hpp"

namespace halfzeta {

namespace {

void require_unit_constant(const RatPoly& a, const char* what)
{
    if (a.coeff(0) != 1)
        throw domain_error(std::string(what) + ": polynomial must have constant term 1");
}

BigInt binomial(int n, int k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

std::vector<BigRat> inverse_root_power_sums(const RatPoly& a, int n)
{
    require_unit_constant(a, "power sums");
    std::vector<BigRat> s(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        BigRat acc = BigRat(k) * a.coeff(k);
        for (int i = 1; i < k; ++i)
            acc += a.coeff(i) * s[static_cast<std::size_t>(k - i)];
        s[static_cast<std::size_t>(k)] = -acc;
    }
    s.erase(s.begin());
    return s;
}

std::vector<BigInt> inverse_root_power_sums(const IntPoly& a, int n)
{
    std::vector<BigInt> out;
    for (const auto& x : inverse_root_power_sums(to_rat(a), n))
        out.push_back(x.get_num());
    return out;
}

RatPoly from_power_sums(const std::vector<BigRat>& s, int degree)
{
    if (static_cast<int>(s.size()) < degree)
        throw domain_error("from_power_sums: not enough power sums");
    std::vector<BigRat> a(static_cast<std::size_t>(degree) + 1);
    a[0] = 1;
    for (int k = 1; k <= degree; ++k) {
        BigRat acc = s[static_cast<std::size_t>(k - 1)];
        for (int i = 1; i < k; ++i)
            acc += a[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i - 1)];
        a[static_cast<std::size_t>(k)] = -acc / k;
    }
    return RatPoly(std::move(a));
}

IntPoly newton_coeffs_from_power_sums(const std::vector<BigInt>& s, int degree, const BigInt& q, int weight)
{
    if (degree < 0)
        throw domain_error("negative degree");
    if (degree == 0)
        return IntPoly{1};
    if ((weight * degree) % 2 != 0)
        throw domain_error("functional equation needs weight*degree even");
    const int half = (degree + 1) / 2;
    if (static_cast<int>(s.size()) < half)
        throw domain_error("newton_coeffs_from_power_sums: need ceil(degree/2) power sums");

    std::vector<BigRat> a(static_cast<std::size_t>(degree) + 1);
    a[0] = 1;
    for (int k = 1; k <= half; ++k) {
        BigRat acc = s[static_cast<std::size_t>(k - 1)];
        for (int i = 1; i < k; ++i)
            acc += a[static_cast<std::size_t>(i)] * BigRat(s[static_cast<std::size_t>(k - i - 1)]);
        a[static_cast<std::size_t>(k)] = -acc / k;
        if (!is_integer(a[static_cast<std::size_t>(k)]))
            throw certification_error("non-integral zeta coefficient a_" + std::to_string(k) + " = " +
                                      to_string(a[static_cast<std::size_t>(k)]) + " (inconsistent point counts)");
    }
    for (int i = 0; i < degree - half; ++i) {
        const int e = weight * (degree - 2 * i) / 2;
        a[static_cast<std::size_t>(degree - i)] =
            a[static_cast<std::size_t>(i)] * BigRat(ipow(q, static_cast<unsigned long>(e)));
    }
    return to_int(RatPoly(std::move(a)));
}

RatPoly tensor_roots(const RatPoly& f, const RatPoly& g)
{
    require_unit_constant(f, "tensor_roots");
    require_unit_constant(g, "tensor_roots");
    const int d = f.degree() * g.degree();
    if (d == 0)
        return RatPoly{1};
    const auto sf = inverse_root_power_sums(f, d);
    const auto sg = inverse_root_power_sums(g, d);
    std::vector<BigRat> s(static_cast<std::size_t>(d));
    for (std::size_t m = 0; m < s.size(); ++m)
        s[m] = sf[m] * sg[m];
    return from_power_sums(s, d);
}

IntPoly tensor_roots(const IntPoly& f, const IntPoly& g) { return to_int(tensor_roots(to_rat(f), to_rat(g))); }

RatPoly exterior_power(const RatPoly& f, int k)
{
    require_unit_constant(f, "exterior_power");
    const int n = f.degree();
    if (k < 0 || k > n)
        throw domain_error("exterior_power: k = " + std::to_string(k) + " out of range [0, " + std::to_string(n) + "]");
    const int big_n = static_cast<int>(binomial(n, k).get_si());
    if (k == 0)
        return RatPoly{1, -1};
    const auto s = inverse_root_power_sums(f, k * big_n);
    // p_m(Lambda^k) = e_k(omega^m); the power sums of omega^m are s_{jm}.
    std::vector<BigRat> pm(static_cast<std::size_t>(big_n));
    for (int m = 1; m <= big_n; ++m) {
        std::vector<BigRat> e(static_cast<std::size_t>(k) + 1);
        e[0] = 1;
        for (int j = 1; j <= k; ++j) {
            BigRat acc = 0;
            for (int i = 1; i <= j; ++i) {
                const BigRat term = e[static_cast<std::size_t>(j - i)] * s[static_cast<std::size_t>(i * m - 1)];
                acc += (i % 2 == 1) ? term : BigRat(-term);
            }
            e[static_cast<std::size_t>(j)] = acc / j;
        }
        pm[static_cast<std::size_t>(m - 1)] = e[static_cast<std::size_t>(k)];
    }
    return from_power_sums(pm, big_n);
}

IntPoly exterior_power(const IntPoly& f, int k) { return to_int(exterior_power(to_rat(f), k)); }

}  // namespace halfzeta
