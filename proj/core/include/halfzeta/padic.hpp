#pragma once

#include <vector>

#include "halfzeta/newton_polygon.hpp"
#include "halfzeta/zeta.hpp"

namespace halfzeta {

/// Newton polygon of each P_i at p (slopes in ord_q units) and
/// g_i = sum over slopes < 1 of (1 - slope) * multiplicity.
struct SlopeProfile {
    std::vector<NewtonPolygon> polygons;
    std::vector<BigRat> g;

    bool g_integral() const;
    /// sum (-1)^i g_i
    BigRat g_alternating() const;
};

SlopeProfile slope_profile(const ZetaFunction& z);

/// Weight-1 slopes all in {0, 1}. Spec F_q counts as ordinary.
bool is_ordinary(const ZetaFunction& z);

struct PadicReport {
    long ord_c2 = 0;   ///< ord_p(c^2)
    long z_direct = 0; ///< -ord_p(q^chi / c^2)
    /// -ord_p(q^{sum (-1)^i g_i}) - 2 sum (-1)^i ord_p(P~_i(p^{-f})); rational
    /// only if some g_i is not an integer.
    BigRat z_slopes;
    BigRat g_alternating;
    std::vector<long> ptilde_ord;  ///< ord_p(P~_i(p^{-f})), P~_i = P_i without (1 - p^f t)
    bool g_integral = true;
    /// z_0 = 1 is assumed (no torsion in the Witt vector cohomology).
    bool b_assumption_flag = true;
    bool equal() const { return BigRat(z_direct) == z_slopes; }
};

PadicReport padic_value_check(const ZetaFunction& z);
/// With an externally supplied slope profile (soundness probes).
PadicReport padic_value_check(const ZetaFunction& z, const SlopeProfile& profile);

}  // namespace halfzeta
