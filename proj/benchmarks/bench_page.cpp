#include "morin/differentials.hpp"
#include "morin/page_engine.hpp"

#include <benchmark/benchmark.h>

using namespace morin;

static void BM_AssembleFold(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(assemble_matrix(d, 1, n));
}
BENCHMARK(BM_AssembleFold)->Args({4, 37})->Args({6, 39})->Args({8, 41});

static void BM_RankFold(benchmark::State& state) {
    LinearMap m = assemble_matrix(static_cast<int>(state.range(0)), 1, static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(m.matrix.rank());
    state.counters["rows"] = static_cast<double>(m.matrix.rows());
    state.counters["cols"] = static_cast<double>(m.matrix.cols());
}
BENCHMARK(BM_RankFold)->Args({4, 37})->Args({6, 39})->Args({8, 41});

static void BM_SecondPage(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int D = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(e2_ranks(d, std::nullopt, D));
}
BENCHMARK(BM_SecondPage)->Args({4, 40})->Args({6, 40})->Args({7, 60})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
