#include "halfzeta/padic.hpp"

#include "halfzeta/errors.hpp"
#include "halfzeta/special_values.hpp"

namespace halfzeta {

bool SlopeProfile::g_integral() const
{
    for (const auto& x : g)
        if (!is_integer(x))
            return false;
    return true;
}

BigRat SlopeProfile::g_alternating() const
{
    BigRat s = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        s += (i % 2 == 0) ? g[i] : BigRat(-g[i]);
    return s;
}

SlopeProfile slope_profile(const ZetaFunction& z)
{
    SlopeProfile prof;
    for (const auto& P : z.P) {
        auto np = newton_polygon(P, z.order.p(), z.order.f());
        BigRat gi = 0;
        for (const auto& s : np.slopes)
            if (s.value < 1)
                gi += (1 - s.value) * s.multiplicity;
        prof.polygons.push_back(std::move(np));
        prof.g.push_back(gi);
    }
    return prof;
}

bool is_ordinary(const ZetaFunction& z)
{
    if (z.P.size() < 2)
        return true;
    for (const auto& s : newton_polygon(z.P[1], z.order.p(), z.order.f()).slopes)
        if (s.value != 0 && s.value != 1)
            return false;
    return true;
}

PadicReport padic_value_check(const ZetaFunction& z) { return padic_value_check(z, slope_profile(z)); }

PadicReport padic_value_check(const ZetaFunction& z, const SlopeProfile& profile)
{
    const std::uint32_t p = z.order.p();
    const long two_f = 2L * z.order.f();
    PadicReport r;

    const BigRat c = c_of(z);
    r.ord_c2 = ord_p(c * c, p);
    r.z_direct = -(two_f * chi_O(z) - r.ord_c2);

    r.g_alternating = profile.g_alternating();
    r.g_integral = profile.g_integral();

    const BigRat t0 = make_rat(1, z.order.sqrt_q());
    const IntPoly lin = IntPoly::one_minus(z.order.sqrt_q());
    long alt = 0;
    for (std::size_t i = 0; i < z.P.size(); ++i) {
        const int m = root_multiplicity(z.P[i], t0);
        const BigRat v = eval(poly_divexact(z.P[i], pow(lin, static_cast<unsigned>(m))), t0);
        const long o = ord_p(v, p);
        r.ptilde_ord.push_back(o);
        alt += (i % 2 == 0) ? o : -o;
    }
    r.z_slopes = -(BigRat(two_f) * r.g_alternating) - 2 * alt;
    return r;
}

}  // namespace halfzeta
