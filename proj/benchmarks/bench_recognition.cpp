#include <benchmark/benchmark.h>

#include <random>

#include "mt/recognizers.hpp"
#include "mt/split.hpp"
#include "mt/tc12.hpp"
#include "mt/verify.hpp"

using namespace mt;

namespace {

Graph random_tree(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    return Graph(n, e);
}

// A star with subdivided rays: MT, so the tree route returns a partition every time.
Graph spider(int legs) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < legs; ++i) {
        e.emplace_back(0, 2 * i + 1);
        e.emplace_back(2 * i + 1, 2 * i + 2);
    }
    return Graph(2 * legs + 1, e);
}

Graph random_split(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    int k = n / 2;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j < k || coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

// Clique plus a matching, each matched pair hanging off one clique vertex: chordal and (1,2)-tc.
Graph clique_plus_matching(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    int k = n / 3;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    for (int v = k; v + 1 < n; v += 2) {
        int c = std::uniform_int_distribution<int>(0, k - 1)(rng);
        e.emplace_back(v, v + 1);
        e.emplace_back(c, v);
        e.emplace_back(c, v + 1);
    }
    return Graph(n, e);
}

void BM_TreeRecognizeAndVerify(benchmark::State& state) {
    Graph t = spider(int(state.range(0)) / 2);
    for (auto _ : state) {
        RecognitionResult r = recognize_mt_tree(t);
        benchmark::DoNotOptimize(verify_result(t, r, GraphClass::MT).ok);
    }
    state.SetComplexityN(t.order());
}
BENCHMARK(BM_TreeRecognizeAndVerify)->RangeMultiplier(2)->Range(1 << 12, 1 << 17)->Complexity(benchmark::oN);

void BM_TreeRandomNo(benchmark::State& state) {
    Graph t = random_tree(int(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(recognize_mt_tree(t).verdict);
    state.SetComplexityN(t.order());
}
BENCHMARK(BM_TreeRandomNo)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oN);

void BM_Split(benchmark::State& state) {
    Graph g = random_split(int(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(recognize_split(g));
    state.SetComplexityN(g.order());
}
BENCHMARK(BM_Split)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_TC12(benchmark::State& state) {
    Graph g = clique_plus_matching(int(state.range(0)), 9);
    for (auto _ : state) benchmark::DoNotOptimize(recognize_tc12(g).yes());
}
BENCHMARK(BM_TC12)->RangeMultiplier(2)->Range(32, 256);

void BM_Oracle(benchmark::State& state) {
    std::mt19937_64 rng(11);
    std::vector<Graph> gs;
    int n = int(state.range(0));
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < 32; ++i) {
        std::vector<std::pair<int, int>> e;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng)) e.emplace_back(a, b);
        gs.emplace_back(n, e);
    }
    for (auto _ : state)
        for (const auto& g : gs) benchmark::DoNotOptimize(mt_bruteforce(g).has_value());
}
BENCHMARK(BM_Oracle)->DenseRange(8, 16, 4);

void BM_AutoDispatch(benchmark::State& state) {
    std::mt19937_64 rng(13);
    std::vector<Graph> gs;
    for (int i = 0; i < 64; ++i) {
        int n = std::uniform_int_distribution<int>(4, 14)(rng);
        std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.1, 0.9)(rng));
        std::vector<std::pair<int, int>> e;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng)) e.emplace_back(a, b);
        gs.emplace_back(n, e);
    }
    for (auto _ : state)
        for (const auto& g : gs) benchmark::DoNotOptimize(recognize(g, Mode::Auto).verdict);
}
BENCHMARK(BM_AutoDispatch);

}  // namespace

BENCHMARK_MAIN();
