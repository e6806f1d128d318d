#pragma once

#include <cstdint>
#include <vector>

#include "halfzeta/polynomial.hpp"

namespace halfzeta {

struct Slope {
    BigRat value;      ///< in ord_q units (ord_q(q) = 1)
    int multiplicity;  ///< horizontal length of the segment

    friend bool operator==(const Slope&, const Slope&) = default;
};

struct NewtonVertex {
    int index;
    long valuation;  ///< ord_p of the coefficient

    friend bool operator==(const NewtonVertex&, const NewtonVertex&) = default;
};

/// Lower convex hull of {(i, ord_p(a_i)) : a_i != 0}. Slopes are weakly
/// increasing and carry their segment length; for a polynomial in
/// inverse-root form they are the valuations of the inverse roots.
struct NewtonPolygon {
    std::vector<NewtonVertex> vertices;
    std::vector<Slope> slopes;

    int total_multiplicity() const;
    /// Slopes expanded with multiplicity, e.g. {1/2, 1/2}.
    std::vector<BigRat> expanded() const;
};

/// Newton polygon of a at the prime p, with slopes normalised to ord_q for
/// q = p^{2 f_exp}. Throws domain_error for the zero polynomial.
NewtonPolygon newton_polygon(const IntPoly& a, std::uint32_t p, int f_exp);

}  // namespace halfzeta
