#include <gtest/gtest.h>

#include <random>

#include "halfzeta/corpus.hpp"
#include "halfzeta/curve.hpp"
#include "halfzeta/curve_io.hpp"
#include "halfzeta/errors.hpp"
#include "halfzeta/tate_rank.hpp"

using namespace halfzeta;
using nlohmann::json;

namespace {

CurveModel from(const char* text) { return curve_from_json(json::parse(text)); }

}  // namespace

TEST(ValidateCurve, SquarefreeCubicOverF9)
{
    const CurveModel c = from(R"({"p": 3, "f": 1, "kind": "hyperelliptic", "genus": 1, "f_coeffs": [0, 1, 0, 1]})");
    EXPECT_EQ(c.genus, 1);
    EXPECT_NO_THROW(validate_curve(c));
}

TEST(ValidateCurve, RejectsRepeatedRoot)
{
    EXPECT_THROW(from(R"({"p": 3, "f": 1, "kind": "hyperelliptic", "genus": 1, "f_coeffs": [0, 0, 1, 1]})"), input_error);
}

TEST(ValidateCurve, PlaneGenusMustMatchDegree)
{
    EXPECT_THROW(from(R"({"p": 3, "f": 1, "kind": "plane", "genus": 2,
                          "F_coeffs": {"4,0,0": 1, "0,4,0": 1, "0,0,4": 1}})"),
                 input_error);
    EXPECT_NO_THROW(from(R"({"p": 3, "f": 1, "kind": "plane", "genus": 3,
                             "F_coeffs": {"4,0,0": 1, "0,4,0": 1, "0,0,4": 1}})"));
}

TEST(ValidateCurve, GenusMustMatchDegreeForHyperelliptic)
{
    EXPECT_THROW(from(R"({"p": 5, "f": 1, "kind": "hyperelliptic", "genus": 2, "f_coeffs": [1, 0, 0, 1]})"), input_error);
}

TEST(ValidateCurve, CharacteristicTwoNeedsNonzeroH)
{
    EXPECT_THROW(from(R"({"p": 2, "f": 1, "kind": "hyperelliptic", "genus": 1, "f_coeffs": [1, 0, 0, 1]})"), input_error);
    EXPECT_NO_THROW(from(R"({"p": 2, "f": 1, "kind": "hyperelliptic", "genus": 1, "f_coeffs": [0, 0, 0, 1], "h_coeffs": [1]})"));
}

TEST(ValidateCurve, NonSquareQ)
{
    try {
        from(R"({"p": 3, "q": 27, "kind": "hyperelliptic", "genus": 1, "f_coeffs": [0, 1, 0, 1]})");
        FAIL();
    } catch (const input_error& e) {
        EXPECT_EQ(std::string(e.what()), "q must be p^{2f}");
    }
}

TEST(CountPoints, ConicOverF4)
{
    // XZ - Y^2 over F_4 is a smooth conic: q + 1 points.
    const CurveModel c = from(R"({"p": 2, "f": 1, "kind": "plane", "genus": 0, "F_coeffs": {"1,0,1": 1, "0,2,0": 1}})");
    EXPECT_EQ(count_points(c, 1), 5U);
    EXPECT_EQ(count_points_enumerate(c, 1), 5U);
}

TEST(CountPoints, CubicOverF9)
{
    const CurveModel c = from(R"({"p": 3, "f": 1, "kind": "hyperelliptic", "genus": 1, "f_coeffs": [0, 1, 0, 1]})");
    EXPECT_EQ(count_points(c, 1), 16U);
    EXPECT_EQ(count_points_enumerate(c, 1), 16U);
}

TEST(CountPoints, WorkerCountDoesNotChangeCounts)
{
    const CurveModel c = from(R"({"p": 5, "f": 1, "kind": "hyperelliptic", "genus": 2, "f_coeffs": [1, 3, 0, 2, 0, 1]})");
    for (int n = 1; n <= 3; ++n) {
        const auto one = count_points(c, n, 1);
        EXPECT_EQ(count_points(c, n, 3), one);
        EXPECT_EQ(count_points(c, n, 8), one);
    }
}

TEST(CountPoints, CharacterSumMatchesEnumeration)
{
    CorpusRng rng(5);
    for (auto o : {SquareOrder(3, 1), SquareOrder(5, 1)})
        for (int g : {1, 2, 3})
            for (const auto& c : random_hyperelliptic(o, g, 3, rng)) {
                EXPECT_EQ(count_points(c, 1), count_points_enumerate(c, 1));
                if (o.p() == 3)
                    EXPECT_EQ(count_points(c, 2), count_points_enumerate(c, 2));
            }
}

TEST(CountPoints, CharacteristicTwoMatchesEnumeration)
{
    CorpusRng rng(6);
    const SquareOrder o(2, 1);
    for (int g : {1, 2, 3})
        for (const auto& c : random_hyperelliptic(o, g, 4, rng))
            for (int n = 1; n <= 2; ++n)
                EXPECT_EQ(count_points(c, n), count_points_enumerate(c, n));
}

TEST(CountPoints, PlaneCurvesMatchEnumeration)
{
    for (auto o : {SquareOrder(2, 1), SquareOrder(3, 1)})
        for (const auto& [name, c] : plane_examples(o))
            for (int n = 1; n <= 2; ++n)
                EXPECT_EQ(count_points(c, n), count_points_enumerate(c, n)) << name << " n=" << n;
}

TEST(CountTable, GenusOneSecondCountFollowsFromTrace)
{
    const CurveModel c = from(R"({"p": 5, "f": 1, "kind": "hyperelliptic", "genus": 1, "f_coeffs": [3, 1, 0, 1]})");
    const auto t = count_table(c, 2);
    const long q = 25;
    const long a = q + 1 - static_cast<long>(t.N.at(1));
    EXPECT_EQ(static_cast<long>(t.N.at(2)), q * q + 1 - (a * a - 2 * q));
}

TEST(CountTable, RejectsEmptyRange)
{
    const CurveModel c = from(R"({"p": 3, "f": 1, "kind": "hyperelliptic", "genus": 1, "f_coeffs": [0, 1, 0, 1]})");
    EXPECT_THROW(count_table(c, 0), domain_error);
}

TEST(CountTable, WeilBoundHoldsOnRandomCurves)
{
    CorpusRng rng(8);
    const SquareOrder o(3, 1);
    for (const auto& c : random_hyperelliptic(o, 2, 10, rng)) {
        const auto t = count_table(c, 3);
        for (const auto& [n, N] : t.N)
            EXPECT_TRUE(within_weil_bound(N, ipow(o.q(), static_cast<unsigned long>(n)), 2));
    }
}

TEST(CountTable, SingularPlaneCubicFailsCertification)
{
    const CurveModel cusp = from(R"({"p": 3, "f": 1, "kind": "plane", "genus": 1, "F_coeffs": {"0,2,1": 1, "3,0,0": 2}})");
    EXPECT_THROW(certify_curve("cusp", cusp), certification_error);
}

TEST(TypeC, ModelOverF4HasOnePoint)
{
    const CurveModel E = find_type_c_curve(2, 1);
    EXPECT_EQ(count_points(E, 1), 1U);
    EXPECT_EQ(count_points_enumerate(E, 1), 1U);
}

TEST(CurveJson, RoundTrip)
{
    const CurveModel c = from(R"({"p": 3, "f": 1, "kind": "hyperelliptic", "genus": 2, "f_coeffs": [1, [0, 1], 0, 2, 0, 1]})");
    EXPECT_EQ(curve_from_json(json::parse(curve_to_json(c).dump())), c);
}

TEST(CurveJson, MissingFileIsInputError)
{
    EXPECT_THROW(load_curve("/nonexistent/curve.json"), input_error);
}
