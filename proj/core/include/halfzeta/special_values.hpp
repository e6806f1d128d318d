#pragma once

#include <optional>

#include "halfzeta/motive.hpp"
#include "halfzeta/zeta.hpp"

namespace halfzeta {

/// Order of the zero of zeta at s = 1/2 (t = p^{-f}):
/// sum_i (-1)^{i+1} mult_{t = p^{-f}} P_i.
int rho_of(const ZetaFunction& z);

/// lim_{t -> p^{-f}} (1 - p^f t)^{-rho} Z(X, t), by exact division of each
/// P_i by its (1 - p^f t) factors.
BigRat c_of(const ZetaFunction& z);

/// The same limit through l'Hopital on the odd part N = prod P_odd:
/// N^{(rho)}(t0) / (rho! (-p^f)^rho) / D(t0). No polynomial division.
BigRat c_by_derivative(const ZetaFunction& z);

/// chi(O_X): 1 - g for curves, 1 for Spec F_q.
long chi_O(const ZetaFunction& z);

/// |f_J(p^f)| / p^{gf}, f_J the monic Frobenius polynomial of the Jacobian.
/// Exact division is asserted (identity_violation otherwise).
BigInt sha_oracle(const ZetaFunction& z);

/// m = |c| [E(F_q)] p^{(g-1)f}. Throws domain_error for a non-ordinary or
/// non-curve input and identity_violation when m is not a positive integer.
BigInt sha_prediction(const ZetaFunction& z);

struct SpecialValueReport {
    int rho = 0;
    BigRat c;
    BigRat c_squared;
    long chi_O = 0;
    BigInt E_order;
    std::optional<BigInt> sha_prediction;
    bool ordinary = false;
    int genus = 0;
};

/// Also asserts rho even and c_squared == c^2 (identity_violation).
SpecialValueReport special_values(const ZetaFunction& z);

struct OrdinaryEllipticCheck {
    BigRat c;
    BigRat rhs;  ///< 1 - N_1 / [E(F_q)]
    bool holds;  ///< |c| == |rhs|
    bool same_sign;
};

/// Genus-1 ordinary only (domain_error otherwise). N1 is the measured count.
OrdinaryEllipticCheck check_ordinary_elliptic(const ZetaFunction& z, const BigInt& N1);

struct BsdCheck {
    bool rational_identity;  ///< L(E/K, u) == Z(X, p^f u)^2
    int order;               ///< ord_{u = 1/q} L(E/K, u)
    int expected_order;      ///< 2 rho_X
    BigRat limit;            ///< lim L(u) (1 - q u)^{-order}
    BigRat c_squared;
    bool holds() const { return rational_identity && order == expected_order && limit == c_squared; }
};

/// L(E/K, u) for the constant curve E over K = F_q(X), built from the motive
/// algebra as L(h(X) (x) h^1(E)).
LFunction bsd_l_function(const ZetaFunction& z, const WeilMotive& h1E);
BsdCheck bsd_limit_check(const ZetaFunction& z);
/// Same check with a caller-supplied h^1(E), for soundness probes.
BsdCheck bsd_limit_check(const ZetaFunction& z, const WeilMotive& h1E);

}  // namespace halfzeta
