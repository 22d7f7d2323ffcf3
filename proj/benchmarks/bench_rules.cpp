#include <algorithm>

#include <benchmark/benchmark.h>

#include "splinequad/golden.hpp"
#include "splinequad/splinecheck.hpp"

using namespace splinequad;

namespace {

void BM_AssembleDouble(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(make_scaled_rule<double>(FamilyId::c1_interior(), n));
}
BENCHMARK(BM_AssembleDouble)->Arg(5)->Arg(20)->Arg(50);

void BM_AssembleExtended(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(make_scaled_rule<Extended>(FamilyId::c1_interior(), n));
}
BENCHMARK(BM_AssembleExtended)->Arg(5)->Arg(20)->Arg(50);

void BM_Exactness(benchmark::State& state)
{
    const auto rule = make_scaled_rule<double>(FamilyId::c0_even(), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_exactness(rule));
}
BENCHMARK(BM_Exactness)->Arg(2)->Arg(6)->Arg(12);

void BM_GoldenRegression(benchmark::State& state)
{
    for (auto _ : state) {
        double worst = 0.0;
        for (const auto& g : builtin_golden()) {
            const auto id = family_of(g);
            const auto rule = make_scaled_rule<double>(id, index_for_degree(id, g.degree));
            worst = std::max(worst, compare_golden(rule, g).max_deviation);
        }
        benchmark::DoNotOptimize(worst);
    }
}
BENCHMARK(BM_GoldenRegression);

} // namespace

BENCHMARK_MAIN();
