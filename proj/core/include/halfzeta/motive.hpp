#pragma once

#include <vector>

#include "halfzeta/numeric_roots.hpp"
#include "halfzeta/polynomial.hpp"
#include "halfzeta/rational.hpp"
#include "halfzeta/zeta.hpp"

namespace halfzeta {

/// One graded piece of Frobenius data: the eigenvalues of weight `weight` are
/// the inverse roots of `poly` (constant term 1, variable u = q^{-s}), and the
/// piece contributes poly(u)^sign to the L-function.
///
/// sign is carried explicitly and multiplies under tensor products. Motives
/// built from a zeta function use sign (-1)^{i+1} on h^i, so that
/// L(h(X)) = Z(X, u); the unit motive Z has sign +1, L = 1 - u.
struct MotivePiece {
    int weight = 0;
    int sign = 1;
    RatPoly poly;

    friend bool operator==(const MotivePiece&, const MotivePiece&) = default;
};

/// Motive up to its graded eigenvalue data, over F_q with q = p^{2f}.
/// Pieces are kept canonical: merged per (weight, sign), trivial ones dropped,
/// sorted by weight then sign.
class WeilMotive {
public:
    WeilMotive(const SquareOrder& o, std::vector<MotivePiece> pieces);

    static WeilMotive unit(const SquareOrder& o);
    /// h(Spec F_q): weight 0, L = (1 - u)^{-1}.
    static WeilMotive point(const SquareOrder& o);
    /// h(X) with pieces h^i = P_i at weight i.
    static WeilMotive from_zeta(const ZetaFunction& z);
    /// A single weight-1 piece, e.g. h^1 of a curve.
    static WeilMotive h1(const SquareOrder& o, const IntPoly& P1);

    const SquareOrder& order() const { return order_; }
    BigInt q() const { return order_.q(); }
    const std::vector<MotivePiece>& pieces() const { return pieces_; }
    /// Sum of piece degrees.
    int rank() const;

    friend bool operator==(const WeilMotive&, const WeilMotive&) = default;

private:
    SquareOrder order_;
    std::vector<MotivePiece> pieces_;
};

/// h^1 of the fixed type-(c) curve E: weight 1, (1 - p^f u)^2.
WeilMotive motive_of_E(const SquareOrder& o);
/// Its dual h_1(E) = h^1(E)(1): weight -1, (1 - u/p^f)^2.
WeilMotive dual_h1_E(const SquareOrder& o);

/// Eigenvalues times q^{-n}, weights shifted by -2n.
WeilMotive twist(const WeilMotive& M, int n);
/// Throws domain_error when the orders differ.
WeilMotive tensor(const WeilMotive& M, const WeilMotive& N);
WeilMotive direct_sum(const WeilMotive& M, const WeilMotive& N);
/// Lambda^k of a single-piece motive, at weight k*w with the alternating sign
/// (-1)^{kw+1}. Throws domain_error for several pieces or k out of range.
WeilMotive exterior_power(const WeilMotive& M, int k);

/// Reduced quotient num/den with den(0) = 1.
class LFunction {
public:
    LFunction(RatPoly num, RatPoly den);

    const RatPoly& numerator() const { return num_; }
    const RatPoly& denominator() const { return den_; }
    /// Throws domain_error at a pole.
    BigRat eval(const BigRat& u) const;
    /// u -> c u.
    LFunction scaled(const BigRat& c) const;

    friend LFunction operator*(const LFunction& a, const LFunction& b);
    friend bool operator==(const LFunction&, const LFunction&) = default;

private:
    RatPoly num_;
    RatPoly den_;
};

LFunction l_function(const WeilMotive& M);

struct HalfShiftResult {
    bool holds;
    LFunction lhs;  ///< L(M, s + 1/2)^2, i.e. L(M)(u / p^f)^2
    LFunction rhs;  ///< L(M (x) E^dual, s)
};

HalfShiftResult check_half_shift_identity(const WeilMotive& M);

/// Largest relative deviation of |eigenvalue| from q^{w/2} over all pieces.
double max_weight_deviation(const WeilMotive& M);

}  // namespace halfzeta
