#include <benchmark/benchmark.h>

#include <numbers>

#include "jcsim/catgen.hpp"
#include "jcsim/jc_oracle.hpp"
#include "jcsim/stats.hpp"

using namespace jcsim;

static void BM_sweep(benchmark::State& state) {
    const auto spec = TwoFockSpec::equal_weights(3, 9);
    const auto steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(spec, 0.0, 2 * std::numbers::pi, steps, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sweep)->Arg(1000)->Arg(100000);

static void BM_sweep_threads(benchmark::State& state) {
    const auto spec = TwoFockSpec::equal_weights(3, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(spec, 0.0, 2 * std::numbers::pi, 200000, state.range(0)));
    }
}
BENCHMARK(BM_sweep_threads)->Arg(1)->Arg(4)->UseRealTime();

static void BM_cat_distribution(benchmark::State& state) {
    const CatSpec spec{static_cast<unsigned>(state.range(0)), 4.899, Parity::even, 64};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cat_distribution(spec));
    }
}
BENCHMARK(BM_cat_distribution)->Arg(2)->Arg(4)->Arg(10);

static void BM_evolve_exact(benchmark::State& state) {
    const auto cutoff = static_cast<PhotonNumber>(state.range(0));
    const JCParams params{1.0, 1.2, 0.1, cutoff};
    const AtomFieldState initial(FockVector(cutoff), TwoFockSpec::equal_weights(1, cutoff - 1).field(cutoff));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_exact(params, initial, 3.7));
    }
}
BENCHMARK(BM_evolve_exact)->Arg(8)->Arg(256);

static void BM_compare_dispersive(benchmark::State& state) {
    const JCParams params{1000.0, 1000.0 + static_cast<double>(state.range(0)), 1.0, 6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(compare_dispersive(params, 5, 2 * std::numbers::pi));
    }
}
BENCHMARK(BM_compare_dispersive)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
