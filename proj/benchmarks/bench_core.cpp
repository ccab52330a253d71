#include "qfano/basket.hpp"
#include "qfano/filters.hpp"
#include "qfano/invariants.hpp"
#include "qfano/search.hpp"
#include "qfano/wps.hpp"

#include <benchmark/benchmark.h>

using namespace qfano;

namespace {

void BM_CorrectionCache(benchmark::State& state) {
    for (auto _ : state) {
        CorrectionCache cache(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(cache);
    }
}
BENCHMARK(BM_CorrectionCache)->Arg(12)->Arg(24);

void BM_EnumerateBaskets(benchmark::State& state) {
    const Rational cap(state.range(0));
    for (auto _ : state) {
        long long n = 0;
        enumerate_baskets(cap, [&](const Basket&) {
            ++n;
            return true;
        });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_EnumerateBaskets)->Arg(12)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_LCubed(benchmark::State& state) {
    const Basket B = Basket::parse("2:1,10:3");
    for (auto _ : state) benchmark::DoNotOptimize(l_cubed(B, 7));
}
BENCHMARK(BM_LCubed);

void BM_EulerCharacteristic(benchmark::State& state) {
    const auto F = NumericalFano::make(Basket::parse("2:1,2:1,3:1,6:1"), 5, make_rational(1, 2));
    for (auto _ : state)
        for (int t = -4; t <= 5; ++t) benchmark::DoNotOptimize(euler_characteristic(F, t));
}
BENCHMARK(BM_EulerCharacteristic);

void BM_TorsionSixteenPoints(benchmark::State& state) {
    const Basket B(std::vector<SingularityPoint>(16, SingularityPoint{2, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(torsion_feasible(B));
}
BENCHMARK(BM_TorsionSixteenPoints);

void BM_ClassifyHigh(benchmark::State& state) {
    SearchConfig cfg;
    cfg.q_min = 3;
    cfg.basket_sum_cap = Rational(state.range(0));
    cfg.jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(classify_high(cfg));
}
BENCHMARK(BM_ClassifyHigh)
    ->Args({12, 1})
    ->Args({18, 1})
    ->Args({24, 1})
    ->Args({24, 8})
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

void BM_ClassifyLow(benchmark::State& state) {
    SearchConfig cfg;
    cfg.q_min = 1;
    cfg.q_max = 2;
    for (auto _ : state) benchmark::DoNotOptimize(classify_low(cfg));
}
BENCHMARK(BM_ClassifyLow)->Unit(benchmark::kMillisecond);

void BM_ScanWps(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(scan_wps(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ScanWps)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
