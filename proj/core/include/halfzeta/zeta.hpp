#pragma once

#include <string>
#include <vector>

#include "halfzeta/curve.hpp"
#include "halfzeta/polynomial.hpp"
#include "halfzeta/rational.hpp"

namespace halfzeta {

/// Z(X, t) = prod_i P_i(t)^{(-1)^{i+1}}, i = 0..2 dim, every P_i(0) = 1.
/// Curves: P_0 = 1 - t, P_1 of degree 2g, P_2 = 1 - q t.
struct ZetaFunction {
    SquareOrder order{2, 1};
    int dim = 1;
    int genus = 0;
    std::vector<IntPoly> P;

    BigInt q() const { return order.q(); }
    bool is_curve() const { return dim == 1; }

    /// Throws domain_error unless P1(0) = 1 and deg P1 is even.
    static ZetaFunction curve(const SquareOrder& o, IntPoly P1);
    /// Spec F_q, stored with P_0 = 1 - t only.
    static ZetaFunction point(const SquareOrder& o);
    static ZetaFunction projective_line(const SquareOrder& o);
    /// The fixed supersingular curve with both eigenvalues p^f: P_1 = (1 - p^f t)^2.
    static ZetaFunction type_c_elliptic(const SquareOrder& o);

    friend bool operator==(const ZetaFunction&, const ZetaFunction&) = default;
};

/// Exact value at t. Throws domain_error at a pole.
BigRat zeta_eval(const ZetaFunction& z, const BigRat& t);

/// N_1..N_n predicted by z: N_k = sum_i (-1)^i s_k(P_i).
std::vector<BigInt> predicted_counts(const ZetaFunction& z, int n);

/// a_{2g-i} = q^{g-i} a_i for all i.
bool functional_equation_holds(const IntPoly& P1, const BigInt& q, int genus);

/// P_1 from s_n = q^n + 1 - N_n, n = 1..g, completed by the functional
/// equation. Every further count in the table must be reproduced; otherwise,
/// or on non-integral coefficients, throws certification_error.
ZetaFunction zeta_from_counts(const SquareOrder& o, int genus, const PointCountTable& table);
ZetaFunction zeta_from_counts(const CurveModel& c, const PointCountTable& table);

/// Counts n = 1..g+1 then zeta_from_counts.
ZetaFunction zeta_of_curve(const CurveModel& c, int workers = 1);

struct ZetaCertificate {
    bool functional_equation = false;
    bool count_match = false;
    bool rh_modulus = false;
    BigInt predicted;
    BigInt measured;
    double rh_max_deviation = 0.0;
    std::string witness;

    /// The RH check is advisory unless require_rh.
    bool passed(bool require_rh) const { return functional_equation && count_match && (rh_modulus || !require_rh); }
};

inline constexpr double rh_tolerance = 1e-9;

/// (a) functional equation, (b) predicted N_{g+1} = extra_count,
/// (c) every inverse root of P_1 has modulus p^f within rh_tolerance.
ZetaCertificate certify_zeta(const ZetaFunction& z, const BigInt& extra_count);

}  // namespace halfzeta
