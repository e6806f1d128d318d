#include "halfzeta/newton_polygon.hpp"

#include "halfzeta/errors.hpp"

namespace halfzeta {

int NewtonPolygon::total_multiplicity() const
{
    int m = 0;
    for (const auto& s : slopes)
        m += s.multiplicity;
    return m;
}

std::vector<BigRat> NewtonPolygon::expanded() const
{
    std::vector<BigRat> out;
    for (const auto& s : slopes)
        for (int i = 0; i < s.multiplicity; ++i)
            out.push_back(s.value);
    return out;
}

NewtonPolygon newton_polygon(const IntPoly& a, std::uint32_t p, int f_exp)
{
    if (a.is_zero())
        throw domain_error("Newton polygon of the zero polynomial");
    if (f_exp < 1)
        throw domain_error("Newton polygon: f must be >= 1");

    std::vector<NewtonVertex> pts;
    for (int i = 0; i <= a.degree(); ++i)
        if (a.coeff(i) != 0)
            pts.push_back({i, ord_p(a.coeff(i), p)});

    // Monotone chain, lower hull only.
    std::vector<NewtonVertex> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& m = hull.back();
            // Drop m when it lies on or above the segment o -> pt.
            const long cross = (m.index - o.index) * (pt.valuation - o.valuation) -
                               (m.valuation - o.valuation) * (pt.index - o.index);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    NewtonPolygon np;
    np.vertices = hull;
    const long norm = 2L * f_exp;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        const int len = hull[i].index - hull[i - 1].index;
        np.slopes.push_back({make_rat(BigInt(hull[i].valuation - hull[i - 1].valuation), BigInt(len * norm)), len});
    }
    return np;
}

}  // namespace halfzeta
