#include "halfzeta/motive.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "halfzeta/errors.hpp"
#include "halfzeta/power_sums.hpp"

namespace halfzeta {

WeilMotive::WeilMotive(const SquareOrder& o, std::vector<MotivePiece> pieces) : order_(o)
{
    std::map<std::pair<int, int>, RatPoly> merged;
    for (auto& piece : pieces) {
        if (piece.sign != 1 && piece.sign != -1)
            throw domain_error("motive piece sign must be +1 or -1");
        if (piece.poly.coeff(0) != 1)
            throw domain_error("motive piece polynomial must have constant term 1");
        auto [it, fresh] = merged.try_emplace({piece.weight, piece.sign}, RatPoly{1});
        it->second = it->second * piece.poly;
    }
    for (auto& [key, poly] : merged)
        if (poly.degree() > 0)
            pieces_.push_back({key.first, key.second, std::move(poly)});
}

WeilMotive WeilMotive::unit(const SquareOrder& o) { return WeilMotive(o, {{0, 1, RatPoly{1, -1}}}); }

WeilMotive WeilMotive::point(const SquareOrder& o) { return WeilMotive(o, {{0, -1, RatPoly{1, -1}}}); }

WeilMotive WeilMotive::from_zeta(const ZetaFunction& z)
{
    std::vector<MotivePiece> pieces;
    for (std::size_t i = 0; i < z.P.size(); ++i)
        pieces.push_back({static_cast<int>(i), (i % 2 == 1) ? 1 : -1, to_rat(z.P[i])});
    return WeilMotive(z.order, std::move(pieces));
}

WeilMotive WeilMotive::h1(const SquareOrder& o, const IntPoly& P1) { return WeilMotive(o, {{1, 1, to_rat(P1)}}); }

int WeilMotive::rank() const
{
    int r = 0;
    for (const auto& piece : pieces_)
        r += piece.poly.degree();
    return r;
}

WeilMotive motive_of_E(const SquareOrder& o)
{
    const RatPoly l = RatPoly::one_minus(BigRat(o.sqrt_q()));
    return WeilMotive(o, {{1, 1, l * l}});
}

WeilMotive dual_h1_E(const SquareOrder& o)
{
    const RatPoly l = RatPoly::one_minus(make_rat(1, o.sqrt_q()));
    return WeilMotive(o, {{-1, 1, l * l}});
}

WeilMotive twist(const WeilMotive& M, int n)
{
    const BigRat c = rpow(BigRat(M.q()), -n);
    std::vector<MotivePiece> pieces;
    for (const auto& piece : M.pieces())
        pieces.push_back({piece.weight - 2 * n, piece.sign, scale_variable(piece.poly, c)});
    return WeilMotive(M.order(), std::move(pieces));
}

WeilMotive tensor(const WeilMotive& M, const WeilMotive& N)
{
    if (!(M.order() == N.order()))
        throw domain_error("tensor of motives over different fields");
    std::vector<MotivePiece> pieces;
    for (const auto& a : M.pieces())
        for (const auto& b : N.pieces())
            pieces.push_back({a.weight + b.weight, a.sign * b.sign, tensor_roots(a.poly, b.poly)});
    return WeilMotive(M.order(), std::move(pieces));
}

WeilMotive direct_sum(const WeilMotive& M, const WeilMotive& N)
{
    if (!(M.order() == N.order()))
        throw domain_error("direct sum of motives over different fields");
    std::vector<MotivePiece> pieces = M.pieces();
    pieces.insert(pieces.end(), N.pieces().begin(), N.pieces().end());
    return WeilMotive(M.order(), std::move(pieces));
}

WeilMotive exterior_power(const WeilMotive& M, int k)
{
    if (M.pieces().size() != 1)
        throw domain_error("exterior power needs a motive with a single piece");
    const auto& piece = M.pieces().front();
    const int w = k * piece.weight;
    const int sign = (w % 2 == 0) ? -1 : 1;
    return WeilMotive(M.order(), {{w, sign, exterior_power(piece.poly, k)}});
}

LFunction::LFunction(RatPoly num, RatPoly den)
{
    if (den.is_zero())
        throw domain_error("L-function with zero denominator");
    const RatPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = poly_divexact(num, g);
        den = poly_divexact(den, g);
    }
    BigRat c = den.coeff(0);
    if (c == 0)
        c = den.leading();
    num_ = (1 / c) * num;
    den_ = (1 / c) * den;
}

BigRat LFunction::eval(const BigRat& u) const
{
    const BigRat d = halfzeta::eval(den_, u);
    if (d == 0)
        throw domain_error("pole of the L-function at u = " + to_string(u));
    return halfzeta::eval(num_, u) / d;
}

LFunction LFunction::scaled(const BigRat& c) const { return LFunction(scale_variable(num_, c), scale_variable(den_, c)); }

LFunction operator*(const LFunction& a, const LFunction& b) { return LFunction(a.num_ * b.num_, a.den_ * b.den_); }

LFunction l_function(const WeilMotive& M)
{
    RatPoly num{1}, den{1};
    for (const auto& piece : M.pieces())
        (piece.sign > 0 ? num : den) = (piece.sign > 0 ? num : den) * piece.poly;
    return LFunction(std::move(num), std::move(den));
}

HalfShiftResult check_half_shift_identity(const WeilMotive& M)
{
    const LFunction shifted = l_function(M).scaled(make_rat(1, M.order().sqrt_q()));
    LFunction lhs = shifted * shifted;
    LFunction rhs = l_function(tensor(M, dual_h1_E(M.order())));
    const bool holds = lhs == rhs;
    return {holds, std::move(lhs), std::move(rhs)};
}

double max_weight_deviation(const WeilMotive& M)
{
    double worst = 0.0;
    const double q = M.q().get_d();
    for (const auto& piece : M.pieces()) {
        const double expected = std::pow(q, piece.weight / 2.0);
        worst = std::max(worst, check_inverse_root_modulus(piece.poly, expected).max_relative_deviation);
    }
    return worst;
}

}  // namespace halfzeta
