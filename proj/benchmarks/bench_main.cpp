#include <benchmark/benchmark.h>

#include "halfzeta/corpus.hpp"
#include "halfzeta/motive.hpp"
#include "halfzeta/power_sums.hpp"
#include "halfzeta/special_values.hpp"

using namespace halfzeta;

namespace {

CurveModel genus2(std::uint32_t p)
{
    CorpusRng rng(1);
    return random_hyperelliptic(SquareOrder(p, 1), 2, 1, rng).front();
}

void BM_CountHyperelliptic(benchmark::State& state)
{
    const CurveModel c = genus2(static_cast<std::uint32_t>(state.range(0)));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_points(c, n));
}
BENCHMARK(BM_CountHyperelliptic)->Args({3, 1})->Args({3, 3})->Args({5, 3})->Args({7, 3});

void BM_CountPlaneQuartic(benchmark::State& state)
{
    const SquareOrder o(static_cast<std::uint32_t>(state.range(0)), 1);
    const CurveModel c = plane_examples(o).back().second;
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_points(c, n));
}
BENCHMARK(BM_CountPlaneQuartic)->Args({3, 2})->Args({3, 4})->Args({5, 3})->Unit(benchmark::kMillisecond);

void BM_CountWorkers(benchmark::State& state)
{
    const CurveModel c = genus2(5);
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_points(c, 3, workers));
}
BENCHMARK(BM_CountWorkers)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_ZetaAssembly(benchmark::State& state)
{
    const CurveModel c = genus2(3);
    const PointCountTable t = count_table(c, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(zeta_from_counts(c, t));
}
BENCHMARK(BM_ZetaAssembly);

void BM_CertifyCurve(benchmark::State& state)
{
    const CurveModel c = genus2(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(certify_curve("bench", c));
}
BENCHMARK(BM_CertifyCurve);

void BM_TensorRoots(benchmark::State& state)
{
    const IntPoly P = IntPoly{1, -1, 9} * IntPoly{1, 2, 9};
    IntPoly acc = P;
    for (int i = 1; i < state.range(0); ++i)
        acc = acc * IntPoly{1, -3, 9};
    for (auto _ : state)
        benchmark::DoNotOptimize(tensor_roots(acc, P));
}
BENCHMARK(BM_TensorRoots)->Arg(1)->Arg(2)->Arg(4);

void BM_ExteriorPower(benchmark::State& state)
{
    IntPoly P{1};
    for (int i = 0; i < 3; ++i)
        P = P * IntPoly{1, BigInt(i - 1), 9};
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(exterior_power(P, k));
}
BENCHMARK(BM_ExteriorPower)->DenseRange(1, 3);

void BM_HalfShift(benchmark::State& state)
{
    const auto motives = random_motives(SquareOrder(3, 1), 20, 7);
    for (auto _ : state)
        for (const auto& M : motives)
            benchmark::DoNotOptimize(check_half_shift_identity(M));
}
BENCHMARK(BM_HalfShift)->Unit(benchmark::kMillisecond);

void BM_SpecialValues(benchmark::State& state)
{
    const auto z = certify_curve("bench", genus2(5)).zeta;
    for (auto _ : state)
        benchmark::DoNotOptimize(special_values(z));
}
BENCHMARK(BM_SpecialValues);

}  // namespace
BENCHMARK_MAIN();
