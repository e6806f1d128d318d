#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "halfzeta/errors.hpp"
#include "halfzeta/newton_polygon.hpp"
#include "halfzeta/polynomial.hpp"
#include "halfzeta/power_sums.hpp"
#include "oracles.hpp"

using namespace halfzeta;
using oracle::int_poly;

namespace {

RatPoly rp(std::initializer_list<long> c)
{
    std::vector<BigRat> v;
    for (long x : c)
        v.emplace_back(x);
    return RatPoly(v);
}

std::vector<long long> as_ll(const IntPoly& a)
{
    std::vector<long long> v;
    for (const auto& c : a.coefficients())
        v.push_back(c.get_si());
    return v;
}

}  // namespace

TEST(Rational, CanonicalForm)
{
    const BigRat r = make_rat(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(to_string(BigRat(5)), "5/1");
    EXPECT_EQ(parse_rat("10/-4"), make_rat(-5, 2));
    EXPECT_THROW(make_rat(1, 0), domain_error);
    EXPECT_THROW(parse_rat("1/0"), input_error);
    EXPECT_THROW(parse_rat("abc"), input_error);
}

TEST(Rational, Valuations)
{
    EXPECT_EQ(ord_p(BigInt(54), 3), 3);
    EXPECT_EQ(ord_p(make_rat(16, 9), 3), -2);
    EXPECT_THROW(ord_p(BigInt(0), 3), domain_error);
}

TEST(PolyMul, Examples)
{
    EXPECT_EQ(int_poly({1, -2}) * int_poly({1, -3}), int_poly({1, -5, 6}));
    const IntPoly a = int_poly({4, 0, -7, 2});
    EXPECT_EQ(a * int_poly({1}), a);
    const IntPoly m = int_poly({1, -3}), pl = int_poly({1, 3});
    EXPECT_EQ(m * m * pl * pl, int_poly({1, 0, -18, 0, 81}));
}

TEST(PolyMul, MatchesSchoolbookOnRandomInputs)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long long> a(rng() % 7 + 1), b(rng() % 7 + 1);
        for (auto& x : a)
            x = static_cast<long long>(rng() % 41) - 20;
        for (auto& x : b)
            x = static_cast<long long>(rng() % 41) - 20;
        EXPECT_EQ(as_ll(int_poly(a) * int_poly(b)), oracle::schoolbook(as_ll(int_poly(a)), as_ll(int_poly(b))));
    }
}

TEST(PolyMul, ZeroHasSentinelDegree)
{
    EXPECT_EQ(IntPoly().degree(), IntPoly::zero_degree);
    EXPECT_TRUE(int_poly({0, 0}).is_zero());
}

TEST(PolyDivExact, Examples)
{
    EXPECT_EQ(poly_divexact(int_poly({1, 0, -9}), int_poly({1, -3})), rp({1, 3}));
    const IntPoly a = int_poly({2, 5, -1});
    EXPECT_EQ(poly_divexact(a, a), rp({1}));
    EXPECT_THROW(poly_divexact(int_poly({1, -1, 9}), int_poly({1, -3})), domain_error);
}

TEST(PolyDivExact, InvertsMultiplication)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly a = oracle::poly_from_int_roots(oracle::random_integer_roots(rng, static_cast<int>(rng() % 5), 6));
        IntPoly b = oracle::poly_from_int_roots(oracle::random_integer_roots(rng, static_cast<int>(rng() % 5), 6));
        a = a * int_poly({static_cast<long long>(rng() % 5) + 1});
        EXPECT_EQ(poly_divexact(a * b, b), to_rat(a));
    }
}

TEST(RootMultiplicity, Examples)
{
    const IntPoly a = int_poly({1, -3}) * int_poly({1, -3}) * int_poly({1, -2});
    // (1 - 3t) vanishes at t = 1/3
    EXPECT_EQ(root_multiplicity(a, make_rat(1, 3)), 2);
    EXPECT_EQ(root_multiplicity(int_poly({1, -1, 9}), make_rat(1, 3)), 0);
    EXPECT_THROW(root_multiplicity(IntPoly(), make_rat(1, 3)), domain_error);
}

TEST(RootMultiplicity, AdditiveUnderProducts)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = oracle::poly_from_int_roots(oracle::random_integer_roots(rng, 4, 3));
        const IntPoly b = oracle::poly_from_int_roots(oracle::random_integer_roots(rng, 4, 3));
        for (long r = -3; r <= 3; ++r) {
            if (r == 0)
                continue;
            const BigRat t = make_rat(1, r);
            EXPECT_EQ(root_multiplicity(a * b, t), root_multiplicity(a, t) + root_multiplicity(b, t));
        }
    }
}

TEST(CommonMultiplicities, Examples)
{
    const IntPoly x3 = int_poly({-3, 1}), x5 = int_poly({-5, 1}), x2 = int_poly({-2, 1});
    const auto r = squarefree_common_multiplicities(x3 * x3, x3 * x5);
    ASSERT_EQ(r.size(), 1U);
    EXPECT_EQ(r[0], (CommonFactor{x3, 2, 1}));

    EXPECT_TRUE(squarefree_common_multiplicities(x3, x5).empty());

    auto s = squarefree_common_multiplicities(x3 * x3 * x2, x3 * x3 * x2 * x2 * x2);
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.mult_g < b.mult_g; });
    ASSERT_EQ(s.size(), 2U);
    EXPECT_EQ(s[0], (CommonFactor{x3, 2, 2}));
    EXPECT_EQ(s[1], (CommonFactor{x2, 1, 3}));
}

TEST(CommonMultiplicities, PairCountMatchesBruteForce)
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ra = oracle::random_integer_roots(rng, static_cast<int>(rng() % 6) + 1, 3);
        const auto rb = oracle::random_integer_roots(rng, static_cast<int>(rng() % 6) + 1, 3);
        // monic in x: prod (x - r)
        auto monic = [](const std::vector<long long>& r) {
            IntPoly p{BigInt(1)};
            for (long long x : r)
                p = p * int_poly({-x, 1});
            return p;
        };
        long brute = 0;
        for (long long x : ra)
            brute += std::count(rb.begin(), rb.end(), x);
        long fast = 0;
        for (const auto& c : squarefree_common_multiplicities(monic(ra), monic(rb)))
            fast += static_cast<long>(c.factor.degree()) * c.mult_f * c.mult_g;
        EXPECT_EQ(fast, brute);
    }
}

TEST(PowerSums, NewtonCoefficientsExamples)
{
    EXPECT_EQ(newton_coeffs_from_power_sums({BigInt(1)}, 2, 9, 1), int_poly({1, -1, 9}));
    EXPECT_EQ(newton_coeffs_from_power_sums({BigInt(6)}, 2, 9, 1), int_poly({1, -6, 9}));
    EXPECT_EQ(newton_coeffs_from_power_sums({}, 0, 9, 1), int_poly({1}));
}

TEST(PowerSums, RoundTripOnWeilPolynomials)
{
    // Products of (1 - a t + q t^2) with |a| <= 2 sqrt q satisfy the functional equation.
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        const long q = 25;
        IntPoly P{BigInt(1)};
        const int g = static_cast<int>(rng() % 3) + 1;
        for (int i = 0; i < g; ++i)
            P = P * int_poly({1, static_cast<long long>(rng() % 21) - 10, q});
        const auto s = inverse_root_power_sums(P, g);
        EXPECT_EQ(newton_coeffs_from_power_sums(s, 2 * g, q, 1), P);
        const auto all = inverse_root_power_sums(P, 2 * g);
        std::vector<BigRat> sr(all.begin(), all.end());
        EXPECT_EQ(from_power_sums(sr, 2 * g), to_rat(P));
    }
}

TEST(PowerSums, InconsistentSumsAreRejected)
{
    // s_1 = 1, s_2 = 0 gives a_2 = 1/2.
    EXPECT_THROW(newton_coeffs_from_power_sums({BigInt(1), BigInt(0)}, 4, 9, 1), certification_error);
}

TEST(TensorRoots, Examples)
{
    EXPECT_EQ(tensor_roots(int_poly({1, -2}), int_poly({1, -3})), int_poly({1, -6}));
    EXPECT_EQ(tensor_roots(int_poly({1, -1, 9}), int_poly({1})), int_poly({1}));
}

TEST(TensorRoots, MatchesNumericRootProducts)
{
    const IntPoly f = int_poly({1, -1, 9});
    const IntPoly g = int_poly({1, -3}) * int_poly({1, -3});
    const IntPoly t = tensor_roots(f, g);
    EXPECT_EQ(t.degree(), 4);
    // Equals prod (1 - 3 alpha t)^2 exactly.
    const IntPoly scaled = scale_variable(f, BigInt(3));
    EXPECT_EQ(t, scaled * scaled);

    std::vector<oracle::cplx> prods;
    for (auto a : oracle::inverse_roots(to_rat(f)))
        for (auto b : oracle::inverse_roots(to_rat(g)))
            prods.push_back(a * b);
    EXPECT_LT(oracle::coefficient_gap(to_rat(t), oracle::from_inverse_roots(prods)), 1e-9);
}

TEST(TensorRoots, CommutativeAssociativeDegreeMultiplies)
{
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 60; ++trial) {
        const IntPoly a = oracle::poly_from_int_roots(oracle::random_integer_roots(rng, static_cast<int>(rng() % 3) + 1, 4));
        const IntPoly b = int_poly({1, static_cast<long long>(rng() % 7) - 3, 4});
        const IntPoly c = oracle::poly_from_int_roots(oracle::random_integer_roots(rng, 2, 3));
        const IntPoly ab = tensor_roots(a, b);
        EXPECT_EQ(ab, tensor_roots(b, a));
        EXPECT_EQ(tensor_roots(ab, c), tensor_roots(a, tensor_roots(b, c)));
        EXPECT_EQ(ab.degree(), a.degree() * b.degree());
    }
}

TEST(ExteriorPower, Examples)
{
    const IntPoly f = int_poly({1, -2}) * int_poly({1, -3});
    EXPECT_EQ(exterior_power(f, 1), f);
    EXPECT_EQ(exterior_power(f, 2), int_poly({1, -6}));
    EXPECT_EQ(exterior_power(f, 0), int_poly({1, -1}));
}

TEST(ExteriorPower, GenusTwoMatchesSubsetProducts)
{
    const IntPoly P = int_poly({1, -1, 9}) * int_poly({1, 2, 9});
    const IntPoly L2 = exterior_power(P, 2);
    EXPECT_EQ(L2.degree(), 6);
    const auto w = oracle::inverse_roots(to_rat(P));
    std::vector<oracle::cplx> prods;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            prods.push_back(w[i] * w[j]);
    EXPECT_LT(oracle::coefficient_gap(to_rat(L2), oracle::from_inverse_roots(prods)), 1e-9);
}

TEST(NewtonPolygon, Examples)
{
    const auto ord = newton_polygon(int_poly({1, -1, 9}), 3, 1);
    EXPECT_EQ(ord.expanded(), (std::vector<BigRat>{0, 1}));
    const auto ss = newton_polygon(int_poly({1, -6, 9}), 3, 1);
    EXPECT_EQ(ss.expanded(), (std::vector<BigRat>{make_rat(1, 2), make_rat(1, 2)}));
    ASSERT_EQ(ss.slopes.size(), 1U);
    EXPECT_EQ(ss.slopes[0].multiplicity, 2);
    EXPECT_TRUE(newton_polygon(int_poly({1}), 3, 1).slopes.empty());
}

TEST(NewtonPolygon, MultiplicitiesSumToDegreeAndIncrease)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long long> c(rng() % 8 + 1);
        c[0] = 1;
        for (std::size_t i = 1; i < c.size(); ++i)
            c[i] = static_cast<long long>(rng() % 200) - 100;
        c.back() = c.back() == 0 ? 27 : c.back();
        const IntPoly a = int_poly(c);
        const auto np = newton_polygon(a, 3, 1);
        EXPECT_EQ(np.total_multiplicity(), a.degree());
        for (std::size_t i = 1; i < np.slopes.size(); ++i)
            EXPECT_LT(np.slopes[i - 1].value, np.slopes[i].value);
    }
}
