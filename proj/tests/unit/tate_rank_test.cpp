#include <gtest/gtest.h>

#include <random>

#include "halfzeta/corpus.hpp"
#include "halfzeta/errors.hpp"
#include "halfzeta/tate_rank.hpp"

using namespace halfzeta;

namespace {

FrobCharPoly monic(std::initializer_list<long> c, long q)
{
    std::vector<BigInt> v;
    for (long x : c)
        v.emplace_back(x);
    return FrobCharPoly::from_monic(IntPoly(v), q);
}

IntPoly x_minus(long r) { return IntPoly{BigInt(-r), BigInt(1)}; }

}  // namespace

TEST(HomRank, Examples)
{
    const SquareOrder o(3, 1);
    const auto fE = frob_of_E(o);
    EXPECT_EQ(hom_rank(fE, fE), 4);
    EXPECT_EQ(hom_rank(fE, monic({9, -1, 1}, 9)), 0);
    const IntPoly both = x_minus(3) * x_minus(3) * IntPoly{9, -1, 1};
    EXPECT_EQ(hom_rank(fE, FrobCharPoly::from_monic(both, 9)), 4);
    EXPECT_THROW(hom_rank(fE, frob_of_E(SquareOrder(2, 1))), domain_error);
}

TEST(HomRank, SymmetricAndAdditive)
{
    std::mt19937_64 rng(51);
    const long q = 9;
    // Factors x^2 - a x + 9 and (x -+ 3).
    auto factor = [&]() {
        const int kind = static_cast<int>(rng() % 3);
        if (kind == 0)
            return x_minus(3) * x_minus(3);
        if (kind == 1)
            return x_minus(-3) * x_minus(-3);
        return IntPoly{BigInt(q), BigInt(-static_cast<long>(rng() % 13) + 6), BigInt(1)};
    };
    for (int t = 0; t < 100; ++t) {
        const IntPoly f = factor(), g = factor(), h = factor();
        const auto F = FrobCharPoly::from_monic(f, q), G = FrobCharPoly::from_monic(g, q),
                   H = FrobCharPoly::from_monic(h, q), GH = FrobCharPoly::from_monic(g * h, q);
        EXPECT_EQ(hom_rank(F, G), hom_rank(G, F));
        EXPECT_EQ(hom_rank(F, GH), hom_rank(F, G) + hom_rank(F, H));
        EXPECT_GE(hom_rank(F, F), F.degree());
    }
}

TEST(HomRank, SelfRankEqualsDegreeIffSquarefree)
{
    EXPECT_EQ(hom_rank(monic({9, -1, 1}, 9), monic({9, -1, 1}, 9)), 2);
    EXPECT_GT(hom_rank(frob_of_E(SquareOrder(3, 1)), frob_of_E(SquareOrder(3, 1))), 2);
}

TEST(RhoHomRank, Examples)
{
    const SquareOrder o(3, 1);
    const auto e = verify_lemma_ord(ZetaFunction::type_c_elliptic(o));
    EXPECT_TRUE(e.holds());
    EXPECT_EQ(e.hom_rank, 4);
    const auto ord = verify_lemma_ord(ZetaFunction::curve(o, IntPoly{1, -1, 9}));
    EXPECT_TRUE(ord.holds());
    EXPECT_EQ(ord.hom_rank, 0);
    // Split Jacobian: one copy of E and one ordinary factor.
    const IntPoly l = IntPoly::one_minus(3);
    const auto split = verify_lemma_ord(ZetaFunction::curve(o, l * l * IntPoly{1, -1, 9}));
    EXPECT_TRUE(split.holds());
    EXPECT_EQ(split.hom_rank, 4);
    EXPECT_EQ(split.two_rho, 4);
}

TEST(RhoHomRank, WholeEllipticCorpus)
{
    for (auto o : {SquareOrder(3, 1), SquareOrder(5, 1)})
        for (const auto& m : elliptic_models(o)) {
            const auto r = verify_lemma_ord(certify_curve("e", m).zeta);
            EXPECT_TRUE(r.holds());
            EXPECT_EQ(r.hom_rank % 4, 0);
        }
}

TEST(ClassifyElliptic, Examples)
{
    EXPECT_EQ(classify_elliptic(4, 2, 1), SupersingularType::type_c);
    EXPECT_EQ(classify_elliptic(-6, 3, 1), SupersingularType::type_b);
    EXPECT_EQ(classify_elliptic(1, 3, 1), SupersingularType::ordinary);
    EXPECT_EQ(classify_elliptic(0, 3, 1), SupersingularType::type_a);
    EXPECT_THROW(classify_elliptic(7, 3, 1), domain_error);
}

TEST(FindTypeC, SmallPrimes)
{
    const std::vector<std::pair<std::uint32_t, unsigned long>> expect{{2, 1}, {3, 4}, {5, 16}};
    for (auto [p, N] : expect) {
        const CurveModel E = find_type_c_curve(p, 1);
        EXPECT_EQ(count_points_enumerate(E, 1), N);
        EXPECT_EQ(find_type_c_curve(p, 1), E);
    }
}

TEST(WeilEtaleRanks, Examples)
{
    const auto e = weil_etale_ranks(ZetaFunction::type_c_elliptic(SquareOrder(2, 1)));
    EXPECT_EQ(e.ranks[0], 4);
    EXPECT_EQ(e.ranks[1], 4);
    EXPECT_EQ(e.secondary, -4);
    EXPECT_EQ(e.alternating_sum, 0);
    EXPECT_TRUE(e.consistent());
    const auto o = weil_etale_ranks(ZetaFunction::curve(SquareOrder(3, 1), IntPoly{1, -1, 9}));
    for (int r : o.ranks)
        EXPECT_EQ(r, 0);
    auto bad = e.ranks;
    bad[1] += 1;
    EXPECT_FALSE(weil_etale_bookkeeping(bad, e.hom_rank_path).consistent());
}
