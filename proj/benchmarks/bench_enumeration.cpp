#include <benchmark/benchmark.h>

#include <random>

#include "mt/canon.hpp"
#include "mt/enumerate.hpp"

using namespace mt;

namespace {

void BM_CanonicalForm(benchmark::State& state) {
    std::mt19937_64 rng(1);
    int n = int(state.range(0));
    std::bernoulli_distribution coin(0.5);
    std::vector<Graph> gs;
    for (int i = 0; i < 64; ++i) {
        std::vector<std::pair<int, int>> e;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng)) e.emplace_back(a, b);
        gs.emplace_back(n, e);
    }
    for (auto _ : state)
        for (const auto& g : gs) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(6, 12, 3);

void BM_CountGraphs(benchmark::State& state) {
    EnumerateOptions opt;
    opt.workers = 1;
    for (auto _ : state) benchmark::DoNotOptimize(count_graphs(int(state.range(0)), Filter::None, opt));
}
BENCHMARK(BM_CountGraphs)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_MinimalObstructions(benchmark::State& state) {
    EnumerateOptions opt;
    opt.workers = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(find_minimal_obstructions(int(state.range(0)), GraphClass::MT, Filter::None, opt));
}
BENCHMARK(BM_MinimalObstructions)->DenseRange(7, 8)->Unit(benchmark::kMillisecond);

void BM_ChordalObstructions(benchmark::State& state) {
    EnumerateOptions opt;
    opt.workers = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(find_minimal_obstructions(8, GraphClass::MT, Filter::Chordal, opt));
}
BENCHMARK(BM_ChordalObstructions)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
