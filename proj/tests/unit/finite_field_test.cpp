#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "halfzeta/errors.hpp"
#include "halfzeta/finite_field.hpp"
#include "halfzeta/fq_poly.hpp"

using namespace halfzeta;

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Polynomials over F_p as low-to-high coefficient vectors, for the irreducibility oracle.
Coeffs mod_poly(Coeffs a, const Coeffs& m, std::uint32_t p)
{
    while (a.size() >= m.size()) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - m.size();
        // m is monic
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(m[i])) % p);
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }
    return a;
}

Coeffs monic_from_code(std::uint64_t code, int deg, std::uint32_t p)
{
    Coeffs c(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    c.back() = 1;
    return c;
}

bool irreducible_by_exhaustion(const Coeffs& m, std::uint32_t p)
{
    const int k = static_cast<int>(m.size()) - 1;
    for (int d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t code = 0; code < count; ++code)
            if (mod_poly(m, monic_from_code(code, d, p), p).empty())
                return false;
    }
    return true;
}

std::vector<std::pair<std::uint32_t, int>> small_fields()
{
    return {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 1}, {7, 2}};
}

}  // namespace

TEST(MakeField, ModulusIsIrreducibleAndDeterministic)
{
    for (auto [p, k] : small_fields()) {
        const auto F = make_field(p, k);
        EXPECT_TRUE(irreducible_by_exhaustion(F->modulus(), p)) << p << "^" << k;
        EXPECT_EQ(make_field(p, k)->modulus(), F->modulus());
        std::uint64_t order = 1;
        for (int i = 0; i < k; ++i)
            order *= p;
        EXPECT_EQ(F->order(), order);
    }
    EXPECT_EQ(make_field(3, 2)->order(), 9U);
}

TEST(MakeField, PrimeFieldModulusIsX)
{
    EXPECT_EQ(make_field(2, 1)->modulus(), (Coeffs{0, 1}));
}

TEST(MakeField, RejectsCompositeCharacteristic)
{
    EXPECT_THROW(make_field(4, 1), input_error);
    EXPECT_THROW(make_field(3, 0), input_error);
}

TEST(MakeField, ModulusIsSmallestIrreducibleCode)
{
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, int>>{{3, 2}, {2, 4}, {5, 2}, {2, 3}}) {
        const auto F = make_field(p, k);
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i)
            count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            const Coeffs m = monic_from_code(code, k, p);
            if (irreducible_by_exhaustion(m, p)) {
                EXPECT_EQ(F->modulus(), m);
                break;
            }
        }
    }
}

TEST(FieldOps, IdentitiesExhaustive)
{
    for (auto [p, k] : small_fields()) {
        const auto F = make_field(p, k);
        const auto Q = F->order();
        for (FiniteField::Index a = 0; a < Q; ++a) {
            EXPECT_EQ(F->add(a, 0), a);
            EXPECT_EQ(F->add(a, F->neg(a)), 0U);
            if (a != 0)
                EXPECT_EQ(F->mul(a, F->inv(a)), 1U);
            EXPECT_EQ(F->pow(a, Q), a);
        }
        EXPECT_THROW(F->inv(0), domain_error);
    }
}

TEST(FieldOps, TablesAgreeWithSchoolbook)
{
    const auto F = make_field(3, 4);
    for (FiniteField::Index a = 0; a < F->order(); ++a)
        for (FiniteField::Index b = 0; b < F->order(); b += 7)
            EXPECT_EQ(F->mul(a, b), F->mul_reference(a, b));
}

TEST(FieldOps, FrobeniusIsARingMap)
{
    for (auto [p, k] : small_fields()) {
        const auto F = make_field(p, k);
        std::mt19937_64 rng(p * 100 + static_cast<unsigned>(k));
        for (int t = 0; t < 300; ++t) {
            const auto a = static_cast<FiniteField::Index>(rng() % F->order());
            const auto b = static_cast<FiniteField::Index>(rng() % F->order());
            EXPECT_EQ(F->frobenius(F->add(a, b)), F->add(F->frobenius(a), F->frobenius(b)));
            EXPECT_EQ(F->frobenius(F->mul(a, b)), F->mul(F->frobenius(a), F->frobenius(b)));
        }
    }
}

TEST(FieldOps, SquareRootCountsFollowQuadraticCharacter)
{
    for (auto [p, k] : small_fields()) {
        if (p == 2)
            continue;
        const auto F = make_field(p, k);
        std::vector<int> roots(F->order(), 0);
        for (FiniteField::Index y = 0; y < F->order(); ++y)
            ++roots[F->mul(y, y)];
        std::uint64_t total = 0;
        for (FiniteField::Index c = 0; c < F->order(); ++c) {
            EXPECT_EQ(roots[c], 1 + F->quadratic_character(c));
            total += static_cast<std::uint64_t>(1 + F->quadratic_character(c));
        }
        EXPECT_EQ(total, F->order());
    }
}

TEST(FieldOps, AbsoluteTraceIsBalanced)
{
    const auto F = make_field(2, 4);
    int ones = 0;
    for (FiniteField::Index a = 0; a < F->order(); ++a)
        ones += static_cast<int>(F->absolute_trace(a));
    EXPECT_EQ(ones, 8);
}

TEST(Embed, OneMapsToOne)
{
    const auto F9 = make_field(3, 2), F81 = make_field(3, 4);
    EXPECT_EQ(embed(one(F9), F81), one(F81));
}

TEST(Embed, PreservesGeneratorOrderAndIsARingMap)
{
    const auto F9 = make_field(3, 2), F81 = make_field(3, 4);
    const FieldElement g(F9, F9->generator());
    EXPECT_EQ(g.multiplicative_order(), 8U);
    EXPECT_EQ(embed(g, F81).multiplicative_order(), 8U);
    for (FiniteField::Index a = 0; a < 9; ++a)
        for (FiniteField::Index b = 0; b < 9; ++b) {
            const FieldElement x(F9, a), y(F9, b);
            EXPECT_EQ(embed(x + y, F81), embed(x, F81) + embed(y, F81));
            EXPECT_EQ(embed(x * y, F81), embed(x, F81) * embed(y, F81));
        }
}

TEST(Embed, IncompatibleDegreesThrow)
{
    EXPECT_THROW(embed(one(make_field(3, 2)), make_field(3, 3)), domain_error);
    EXPECT_THROW(one(make_field(3, 2)) + one(make_field(3, 4)), domain_error);
}

TEST(Enumerate, SmallFields)
{
    EXPECT_EQ(enumerate(make_field(2, 2)).size(), 4U);
    const auto F9 = make_field(3, 2);
    std::set<FiniteField::Index> seen, nonzero_powers;
    for (const auto& x : enumerate(F9))
        seen.insert(x.index());
    EXPECT_EQ(seen.size(), 9U);
    const FieldElement g(F9, F9->generator());
    FieldElement x = one(F9);
    for (int i = 0; i < 8; ++i, x = x * g)
        nonzero_powers.insert(x.index());
    EXPECT_EQ(nonzero_powers.size(), 8U);
}

TEST(Enumerate, DefaultBoundRejectsLargeFields)
{
    EXPECT_THROW(enumerate(make_field(2, 24)), bound_exceeded);
}

TEST(Enumerate, EnvironmentOverridesBound)
{
    ::setenv("HALFZETA_ENUM_BOUND", "8", 1);
    EXPECT_EQ(enumeration_bound(), 8U);
    EXPECT_THROW(enumerate(make_field(3, 2)), bound_exceeded);
    ::setenv("HALFZETA_ENUM_BOUND", "junk", 1);
    EXPECT_THROW(enumeration_bound(), input_error);
    ::unsetenv("HALFZETA_ENUM_BOUND");
    EXPECT_EQ(enumeration_bound(), default_enumeration_bound);
}

TEST(FqPoly, RootCountingPathsAgree)
{
    // Direct scan for Q <= 256 against the gcd route on the same polynomial embedded higher.
    const auto F = make_field(2, 8);
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
        std::vector<FiniteField::Index> c(rng() % 5 + 2);
        for (auto& x : c)
            x = static_cast<FiniteField::Index>(rng() % F->order());
        c.back() = c.back() == 0 ? 1 : c.back();
        const FqPoly g(F, c);
        int brute = 0;
        for (FiniteField::Index x = 0; x < F->order(); ++x)
            brute += g.eval(x) == 0 ? 1 : 0;
        EXPECT_EQ(count_distinct_roots(g), brute);
        const FqPoly ext = embed(g, make_field(2, 16));
        const int in_ext = count_distinct_roots(ext);
        EXPECT_GE(in_ext, brute);
    }
}

TEST(FqPoly, DivisionAndGcd)
{
    const auto F = make_field(5, 1);
    const FqPoly a(F, {1, 0, 1}), b(F, {4, 1});  // x^2 + 1, x - 1
    const auto qr = divmod(a * b, b);
    EXPECT_EQ(qr.quotient, a);
    EXPECT_TRUE(qr.remainder.is_zero());
    EXPECT_EQ(gcd(a * b, b * b), b);
    EXPECT_THROW(divmod(a, FqPoly(F)), domain_error);
}
