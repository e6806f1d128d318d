#pragma once

#include <string>
#include <vector>

#include "halfzeta/curve.hpp"
#include "halfzeta/zeta.hpp"

namespace halfzeta {

/// Characteristic polynomial of Frobenius on an abelian variety over F_q,
/// monic in x.
class FrobCharPoly {
public:
    /// Throws domain_error unless monic of even degree.
    static FrobCharPoly from_monic(IntPoly monic, const BigInt& q);
    /// x^{deg} P(1/x) for a zeta numerator P with P(0) = 1.
    static FrobCharPoly from_zeta_numerator(const IntPoly& P, const BigInt& q);

    const IntPoly& poly() const { return poly_; }
    const BigInt& q() const { return q_; }
    int degree() const { return poly_.degree(); }

private:
    FrobCharPoly(IntPoly p, BigInt q) : poly_(std::move(p)), q_(std::move(q)) {}

    IntPoly poly_;
    BigInt q_;
};

/// Tate's r(f_A, f_B) = sum over common roots of mult_A * mult_B, from gcds
/// and squarefree decompositions only. Throws domain_error when q differs.
int hom_rank(const FrobCharPoly& fA, const FrobCharPoly& fB);

/// (x - p^f)^2, Frobenius on the fixed type-(c) curve E.
FrobCharPoly frob_of_E(const SquareOrder& o);

struct LemmaOrdResult {
    int hom_rank;  ///< rank Hom(E, Pic X) via gcd multiplicities
    int two_rho;   ///< 2 rho_X via root multiplicity
    bool holds() const { return hom_rank == two_rho; }
};

LemmaOrdResult verify_lemma_ord(const ZetaFunction& z);

enum class SupersingularType { ordinary, type_a, type_b, type_c, mixed };
std::string to_string(SupersingularType t);

/// Throws domain_error when |trace| > 2 p^f.
SupersingularType classify_elliptic(const BigInt& trace, std::uint32_t p, int f);

/// First model with N_1 = (p^f - 1)^2 in a fixed coefficient order:
/// p >= 5: y^2 = x^3 + a4 x + a6; p = 3: y^2 = x^3 + a2 x^2 + a4 x + a6;
/// p = 2: y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6, tuples compared
/// lexicographically in the order listed, coefficients by field index.
/// Throws bound_exceeded if the search space is too large and domain_error
/// on exhaustion.
CurveModel find_type_c_curve(std::uint32_t p, int f, int workers = 1);

struct WeilEtaleRanks {
    std::vector<int> ranks;  ///< r_0, r_1, ..., length 2 + 2 dim
    int alternating_sum = 0; ///< sum (-1)^i r_i
    int secondary = 0;       ///< sum (-1)^i i r_i
    int hom_rank_path = 0;   ///< 2 rho from Tate's formula
    bool consistent() const;
};

/// Predicted ranks (2 rho, 2 rho, 0, ...), cross-checked against hom_rank.
/// Throws identity_violation when the two rank paths disagree.
WeilEtaleRanks weil_etale_ranks(const ZetaFunction& z);
/// Bookkeeping on explicit ranks (used by the soundness probes).
WeilEtaleRanks weil_etale_bookkeeping(std::vector<int> ranks, int hom_rank_path);

}  // namespace halfzeta
