#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "halfzeta/finite_field.hpp"
#include "halfzeta/fq_poly.hpp"
#include "halfzeta/rational.hpp"

namespace halfzeta {

enum class CurveKind { hyperelliptic, plane };

std::string to_string(CurveKind k);

/// X^x Y^y Z^z.
struct Monomial {
    int x = 0, y = 0, z = 0;

    int degree() const { return x + y + z; }
    auto operator<=>(const Monomial&) const = default;
};

/// A curve over F_q, q = p^{2f}. Coefficients are indices into the
/// canonical field F_{p^{2f}} (see FiniteField).
///
/// hyperelliptic: y^2 + h(x) y = f(x).
/// plane: F(X, Y, Z) = 0, F homogeneous.
struct CurveModel {
    SquareOrder order{2, 1};
    CurveKind kind = CurveKind::hyperelliptic;
    int genus = 0;
    std::vector<FiniteField::Index> f_coeffs;
    std::vector<FiniteField::Index> h_coeffs;
    std::map<Monomial, FiniteField::Index> plane_terms;

    std::uint32_t p() const { return order.p(); }
    int f() const { return order.f(); }
    FieldRef base_field() const { return make_field(order.p(), 2 * order.f()); }
    FqPoly f_poly() const { return FqPoly(base_field(), f_coeffs); }
    FqPoly h_poly() const { return FqPoly(base_field(), h_coeffs); }
    /// Total degree of a plane model (0 if empty).
    int plane_degree() const;

    friend bool operator==(const CurveModel&, const CurveModel&) = default;
};

/// Structural checks. Throws input_error with the reason on failure:
/// odd p needs h = 0 and squarefree f, p = 2 needs h != 0, degrees must match
/// the declared genus, plane genus must be (d-1)(d-2)/2. Returns the model with
/// trailing zero coefficients removed.
CurveModel validate_curve(CurveModel c);

/// [X(F_{q^n})] of the smooth projective model, by character sums over x
/// (hyperelliptic) or distinct-root counts per line (plane). The x-range is
/// split across `workers` threads; the result does not depend on the split.
/// Throws bound_exceeded when q^n exceeds enumeration_bound().
std::uint64_t count_points(const CurveModel& c, int n, int workers = 1);

/// Independent brute-force path: every (x, y) pair resp. every point of
/// P^2(F_{q^n}) is tested. Needs (q^n)^2 within the enumeration bound.
std::uint64_t count_points_enumerate(const CurveModel& c, int n);

struct PointCountTable {
    std::map<int, std::uint64_t> N;

    friend bool operator==(const PointCountTable&, const PointCountTable&) = default;
};

/// N_n for n = 1..upto. Throws domain_error for upto < 1 and
/// certification_error if a count breaks the Weil bound.
PointCountTable count_table(const CurveModel& c, int upto, int workers = 1);

/// Number of free Weierstrass coefficients in the canonical family:
/// 2 (a4, a6) for p >= 5, 3 (a2, a4, a6) for p = 3, 5 (a1, a3, a2, a4, a6) for p = 2.
int weierstrass_arity(std::uint32_t p);

/// Unvalidated genus-1 model from coefficients in the order above:
/// y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6.
CurveModel weierstrass_model(const SquareOrder& o, const std::vector<FiniteField::Index>& a);

/// (N - q^n - 1)^2 <= 4 g^2 q^n.
bool within_weil_bound(std::uint64_t N, const BigInt& qn, int genus);

}  // namespace halfzeta
