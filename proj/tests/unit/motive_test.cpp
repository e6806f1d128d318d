#include <gtest/gtest.h>

#include "halfzeta/corpus.hpp"
#include "halfzeta/errors.hpp"
#include "halfzeta/motive.hpp"

using namespace halfzeta;

namespace {

RatPoly rp(std::initializer_list<BigRat> c) { return RatPoly(std::vector<BigRat>(c)); }

}  // namespace

TEST(MotiveOfE, Examples)
{
    const auto M9 = motive_of_E(SquareOrder(3, 1));
    ASSERT_EQ(M9.pieces().size(), 1U);
    EXPECT_EQ(M9.pieces()[0].poly, rp({1, -6, 9}));
    EXPECT_EQ(M9.pieces()[0].weight, 1);
    EXPECT_EQ(motive_of_E(SquareOrder(2, 1)).pieces()[0].poly, rp({1, -4, 4}));
    EXPECT_THROW(SquareOrder::from_q(8), input_error);
}

TEST(DualH1E, Examples)
{
    EXPECT_EQ(dual_h1_E(SquareOrder(3, 1)).pieces()[0].poly, rp({1, make_rat(-2, 3), make_rat(1, 9)}));
    EXPECT_EQ(dual_h1_E(SquareOrder(2, 1)).pieces()[0].poly, rp({1, -1, make_rat(1, 4)}));
    const auto T = tensor(motive_of_E(SquareOrder(3, 1)), dual_h1_E(SquareOrder(3, 1)));
    ASSERT_EQ(T.pieces().size(), 1U);
    EXPECT_EQ(T.pieces()[0].weight, 0);
    EXPECT_EQ(T.pieces()[0].poly, rp({1, -4, 6, -4, 1}));
}

TEST(Twist, Examples)
{
    const SquareOrder o(3, 1);
    const auto E = motive_of_E(o);
    EXPECT_EQ(twist(E, 0), E);
    const auto Z1 = twist(WeilMotive::unit(o), 1);
    EXPECT_EQ(Z1.pieces()[0].poly, rp({1, make_rat(-1, 9)}));
    EXPECT_EQ(Z1.pieces()[0].weight, -2);
    EXPECT_EQ(twist(E, 1), dual_h1_E(o));
}

TEST(Tensor, Examples)
{
    const SquareOrder o(3, 1);
    const auto E = motive_of_E(o);
    EXPECT_EQ(tensor(WeilMotive::unit(o), E), E);
    const auto Ep = WeilMotive::h1(o, IntPoly{1, -1, 9});
    const auto T = tensor(Ep, dual_h1_E(o));
    const RatPoly one = rp({1, make_rat(-1, 3), 1});
    EXPECT_EQ(T.pieces()[0].poly, one * one);
    EXPECT_EQ(T.rank(), Ep.rank() * dual_h1_E(o).rank());
}

TEST(LFunction, Examples)
{
    const SquareOrder o(3, 1);
    const auto Lu = l_function(WeilMotive::unit(o));
    EXPECT_EQ(Lu.numerator(), rp({1, -1}));
    EXPECT_EQ(Lu.denominator(), rp({1}));
    const auto LE = l_function(motive_of_E(o));
    EXPECT_EQ(LE.numerator(), rp({1, -6, 9}));
    EXPECT_EQ(LE.eval(0), 1);
}

TEST(HalfShift, Examples)
{
    const SquareOrder o(3, 1);
    EXPECT_TRUE(check_half_shift_identity(WeilMotive::unit(o)).holds);
    const auto r = check_half_shift_identity(WeilMotive::h1(o, IntPoly{1, -1, 9}));
    EXPECT_TRUE(r.holds);
    const RatPoly one = rp({1, make_rat(-1, 3), 1});
    EXPECT_EQ(r.lhs.numerator(), one * one);
    // At u = 1 the unit motive gives [E(F_q)]/q.
    const auto u = check_half_shift_identity(WeilMotive::unit(o));
    EXPECT_EQ(u.lhs.eval(1), make_rat(4, 9));
}

TEST(HalfShift, PerturbedMotiveFails)
{
    const SquareOrder o(3, 1);
    const auto M = WeilMotive::h1(o, IntPoly{1, -1, 9});
    auto pieces = M.pieces();
    pieces[0].poly = pieces[0].poly * rp({1, -2});
    const auto lhs = check_half_shift_identity(M).lhs;
    const auto rhs = l_function(tensor(WeilMotive(o, pieces), dual_h1_E(o)));
    EXPECT_FALSE(lhs == rhs);
}

TEST(HalfShift, RandomMotives)
{
    for (auto o : {SquareOrder(2, 1), SquareOrder(3, 1), SquareOrder(5, 1)})
        for (const auto& M : random_motives(o, 40, 3))
            EXPECT_TRUE(check_half_shift_identity(M).holds);
}

TEST(Motives, AlgebraicLaws)
{
    const SquareOrder o(3, 1);
    const auto ms = random_motives(o, 20, 9);
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
        const auto& M = ms[i];
        const auto& N = ms[i + 1];
        EXPECT_EQ(l_function(tensor(M, WeilMotive::unit(o))), l_function(M));
        EXPECT_EQ(twist(twist(M, 1), 2), twist(M, 3));
        EXPECT_EQ(twist(twist(M, -1), 1), M);
        EXPECT_EQ(l_function(direct_sum(M, N)), l_function(M) * l_function(N));
        EXPECT_EQ(tensor(M, N).rank(), M.rank() * N.rank());
        EXPECT_LT(max_weight_deviation(M), 1e-9);
    }
}

TEST(Motives, ExteriorSquareOfGenusTwo)
{
    const SquareOrder o(3, 1);
    const auto M = WeilMotive::h1(o, IntPoly{1, -1, 9} * IntPoly{1, 2, 9});
    const auto L2 = exterior_power(M, 2);
    EXPECT_EQ(L2.rank(), 6);
    EXPECT_EQ(L2.pieces()[0].weight, 2);
    EXPECT_LT(max_weight_deviation(L2), 1e-9);
    EXPECT_TRUE(check_half_shift_identity(L2).holds);
}
