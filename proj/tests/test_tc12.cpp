#include "doctest.h"
#include "mt/catalog.hpp"
#include "mt/oracle.hpp"
#include "mt/tc12.hpp"
#include "support.hpp"

using namespace mt;
using namespace testing_support;

namespace {

int ceil5(int n) { return (n + 4) / 5; }

struct Tally {
    int yes = 0, no = 0, promise = 0, fallbacks = 0;
};

// Checks the result against the oracle and tallies it.
void check(const Graph& g, const TC12Result& r, Tally& t) {
    CAPTURE(write_graph6(g));
    REQUIRE((r.yes() || r.no()));
    CHECK(r.depth <= ceil5(g.order()));
    t.fallbacks += r.fallbacks;
    bool member = tc12_bruteforce(g).has_value();
    if (r.yes()) {
        ++t.yes;
        REQUIRE(verify_tc12_partition(g, r.partition()));
        return;
    }
    const auto& w = r.witness();
    const auto* cat = catalog_by_name(w.catalog);
    REQUIRE(cat != nullptr);
    REQUIRE(verify_no_certificate(g, w, *cat));
    if (w.obstruction_id == "C4") {
        ++t.promise;
        CHECK(w.kind == NoKind::PromiseViolation);
        CHECK(find_C4(g));
    } else {
        ++t.no;
        CHECK(w.kind == NoKind::Obstruction);
        REQUIRE_FALSE(member);
    }
}

// A clique, a matching and sparse edges between them, kept only when C4-free.
std::optional<Graph> random_tc12_shape(std::mt19937_64& rng, int n) {
    int a = std::uniform_int_distribution<int>(1, n - 1)(rng);
    std::bernoulli_distribution cross(0.25), pair(0.6);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) e.emplace_back(i, j);
    for (int b = a; b + 1 < n; b += 2)
        if (pair(rng)) e.emplace_back(b, b + 1);
    for (int i = 0; i < a; ++i)
        for (int b = a; b < n; ++b)
            if (cross(rng)) e.emplace_back(i, b);
    Graph g = random_relabel(rng, Graph(n, e));
    if (find_C4(g)) return std::nullopt;
    return g;
}

}  // namespace

TEST_CASE("exact neighbourhoods") {
    auto p5 = exact_neighborhoods(path_graph(5), {0, 1, 3, 4});
    CHECK(p5.N({2, 3}) == std::vector<int>{2});
    CHECK(p5.code[2] == 0b0110);
    CHECK(p5.code[0] == -1);

    Graph k2x3 = union_of({complete_graph(2), complete_graph(2), complete_graph(2)});
    auto t = exact_neighborhoods(k2x3, {0, 1, 2, 3});
    CHECK(t.at(0) == std::vector<int>{4, 5});
    int total = 0;
    for (const auto& p : t.parts) total += int(p.size());
    CHECK(total == 2);

    CHECK_THROWS_AS(exact_neighborhoods(path_graph(4), {0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(exact_neighborhoods(k2x3, {0, 1, 1, 2}), std::invalid_argument);
}

TEST_CASE("clique comparability") {
    // C = {0,1}; x = 2, y = 3.
    Graph nested = from_edges(4, {{0, 1}, {2, 3}, {2, 0}, {3, 0}, {3, 1}});
    CHECK_FALSE(check_clique_comparability(nested, VertexSet(4, {0, 1}), 2, 3));
    Graph crossed = from_edges(4, {{0, 1}, {2, 3}, {2, 0}, {3, 1}});
    auto w = check_clique_comparability(crossed, VertexSet(4, {0, 1}), 2, 3);
    REQUIRE(w);
    CHECK(*w == std::vector<int>{0, 1, 3, 2});
    CHECK(isomorphic(induced_subgraph(crossed, *w).graph, cycle_graph(4)));
    CHECK_FALSE(check_clique_comparability(crossed, VertexSet(4), 2, 3));
    CHECK_THROWS_AS(check_clique_comparability(crossed, VertexSet(4, {0, 1}), 0, 3), std::invalid_argument);
}

TEST_CASE("complete vertex over a clique") {
    Graph single = from_edges(4, {{1, 2}, {2, 3}, {0, 1}});
    auto r = complete_vertex_over_clique(single, VertexSet(4, {0}), {1, 2, 3});
    REQUIRE(std::holds_alternative<int>(r));
    CHECK(std::get<int>(r) == 1);

    // Path x-y-z with v seen only by x, w only by z: a 5-cycle x-v-w-z-y.
    Graph five = from_edges(5, {{0, 1}, {2, 3}, {3, 4}, {2, 0}, {4, 1}});
    auto c = complete_vertex_over_clique(five, VertexSet(5, {0, 1}), {2, 3, 4});
    REQUIRE(std::holds_alternative<NoCertificate>(c));
    const auto& w = std::get<NoCertificate>(c);
    CHECK(w.obstruction_id == "C5");
    CHECK(verify_no_certificate(five, w, f_catalog()));

    // Triangle with nested traces: the largest trace owns the clique.
    Graph tri = from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}, {5, 0}});
    auto t = complete_vertex_over_clique(tri, VertexSet(6, {0, 1, 2}), {5, 4, 3});
    REQUIRE(std::holds_alternative<int>(t));
    CHECK(std::get<int>(t) == 3);
}

TEST_CASE("audits") {
    Graph two_k2 = from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(lemma_audits(two_k2, exact_neighborhoods(two_k2, {0, 1, 2, 3})));

    Graph c6 = cycle_graph(6);
    REQUIRE_FALSE(tc12_bruteforce(c6));
    auto w = lemma_audits(c6, exact_neighborhoods(c6, {0, 1, 3, 4}));
    REQUIRE(w);
    CHECK((w->obstruction_id == "C6" || w->obstruction_id == "C5"));
    CHECK(verify_no_certificate(c6, *w, f_catalog()));

    // x in N_13 and y in N_24, non-adjacent: the six vertices close a hole.
    Graph hole = from_edges(6, {{0, 1}, {2, 3}, {4, 0}, {4, 2}, {5, 1}, {5, 3}});
    auto h = lemma_audits(hole, exact_neighborhoods(hole, {0, 1, 2, 3}));
    REQUIRE(h);
    CHECK(h->obstruction_id == "C6");
    CHECK(h->witness.size() == 6);
    CHECK(verify_no_certificate(hole, *h, f_catalog()));
}

TEST_CASE("base partition") {
    Graph two_k2 = from_edges(4, {{0, 1}, {2, 3}});
    auto b = base_partition(two_k2, exact_neighborhoods(two_k2, {0, 1, 2, 3}));
    REQUIRE(std::holds_alternative<BasePartition>(b));
    const auto& bp = std::get<BasePartition>(b);
    CHECK(bp.partition.A.empty());
    CHECK(bp.partition.B.size() == 4);
    CHECK(bp.recursion.empty());

    // One vertex adjacent to anchors 1 and 3.
    Graph g = from_edges(5, {{0, 1}, {2, 3}, {4, 0}, {4, 2}});
    REQUIRE(tc12_bruteforce(g));
    auto nb = exact_neighborhoods(g, {0, 1, 2, 3});
    REQUIRE_FALSE(lemma_audits(g, nb));
    auto c = base_partition(g, nb);
    REQUIRE(std::holds_alternative<BasePartition>(c));
    CHECK(verify_tc12_partition(g, std::get<BasePartition>(c).partition));

    // Left side non-empty, N_13 non-empty, N_1 empty: (A + anchor 1, {2,3,4} + N_2).
    // 4 in N_12, 5 in N_13, 6 in N_2.
    Graph two = from_edges(7, {{0, 1}, {2, 3}, {4, 0}, {4, 1}, {5, 0}, {5, 2}, {6, 1}, {4, 5}});
    auto nb2 = exact_neighborhoods(two, {0, 1, 2, 3});
    REQUIRE_FALSE(lemma_audits(two, nb2));
    auto d = base_partition(two, nb2);
    REQUIRE(std::holds_alternative<BasePartition>(d));
    const auto& p = std::get<BasePartition>(d);
    CHECK(p.mode == MergeMode::Rec2);
    CHECK(p.partition.A == VertexSet(7, {0, 4, 5}));
    CHECK(p.partition.B == VertexSet(7, {1, 2, 3, 6}));
    CHECK(verify_tc12_partition(two, p.partition));
}

TEST_CASE("merge") {
    Graph g = from_edges(4, {{0, 1}, {2, 3}, {0, 2}, {1, 2}});
    TC12Partition outer{VertexSet(4, {0, 1}), VertexSet(4)};
    TC12Partition inner{VertexSet(4, {2}), VertexSet(4, {3})};
    auto m = merge_partitions(g, outer, inner, MergeMode::Rec1);
    REQUIRE(std::holds_alternative<TC12Partition>(m));
    CHECK(std::get<TC12Partition>(m).A == VertexSet(4, {0, 1, 2}));
    CHECK(std::get<TC12Partition>(m).B == VertexSet(4, {3}));

    // K_{2,3} with sides {v, w} and {x, y, z}: F-free, outside tc12, and no repair helps.
    Graph k23 = from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    REQUIRE_FALSE(tc12_bruteforce(k23));
    TC12Partition o{VertexSet(5, {1}), VertexSet(5, {4})};
    TC12Partition i{VertexSet(5, {0}), VertexSet(5, {2, 3})};
    auto r = merge_partitions(k23, o, i, MergeMode::Rec1);
    REQUIRE(std::holds_alternative<NoCertificate>(r));
    CHECK(std::get<NoCertificate>(r).obstruction_id == "C4");
    CHECK(verify_no_certificate(k23, std::get<NoCertificate>(r), f_catalog()));

    // A C4 with a pendant is still tc12 and the merge finds a partition.
    Graph h = from_edges(5, {{0, 2}, {0, 3}, {1, 4}, {2, 1}, {3, 1}});
    auto ok = merge_partitions(h, TC12Partition{VertexSet(5, {1}), VertexSet(5, {4})},
                               TC12Partition{VertexSet(5, {0}), VertexSet(5, {2, 3})}, MergeMode::Rec1);
    REQUIRE(std::holds_alternative<TC12Partition>(ok));
    CHECK(verify_tc12_partition(h, std::get<TC12Partition>(ok)));
}

TEST_CASE("recognize_tc12 examples") {
    auto c4 = recognize_tc12(cycle_graph(4));
    REQUIRE(c4.no());
    CHECK(c4.witness().obstruction_id == "C4");
    CHECK(c4.witness().kind == NoKind::PromiseViolation);
    CHECK(tc12_bruteforce(cycle_graph(4)));
    CHECK(to_recognition_result(c4).verdict == Verdict::Undecided);

    Graph pk = union_of({path_graph(3), complete_graph(3), complete_graph(2)});
    REQUIRE_FALSE(tc12_bruteforce(pk));
    auto r = recognize_tc12(pk);
    REQUIRE(r.no());
    CHECK(r.witness().obstruction_id == "P3+K3");
    CHECK(verify_no_certificate(pk, r.witness(), f_catalog()));
    CHECK(to_recognition_result(r).verdict == Verdict::No);

    Graph two_k2 = from_edges(4, {{0, 1}, {2, 3}});
    auto y = recognize_tc12(two_k2);
    REQUIRE(y.yes());
    CHECK(y.partition().B.size() == 4);

    auto empty = recognize_tc12(Graph(0));
    REQUIRE(empty.yes());
    CHECK(empty.depth == 0);
}

TEST_CASE("ten-vertex composite recurses twice") {
    // Anchors 0-1, 2-3; K2 {4,5} joined to everything; N_empty = 2K2 {6-7, 8-9}.
    std::vector<std::pair<int, int>> e{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}};
    for (int x : {4, 5})
        for (int v = 0; v < 10; ++v)
            if (v != 4 && v != 5) e.emplace_back(x, v);
    Graph g(10, e);
    REQUIRE(tc12_bruteforce(g));
    auto r = recognize_tc12(g);
    REQUIRE(r.yes());
    CHECK(r.depth == 2);
    CHECK(r.fallbacks == 0);
    CHECK(verify_tc12_partition(g, r.partition()));
}

TEST_CASE("C7 is caught through the holes catalog") {
    Graph c7 = cycle_graph(7);
    REQUIRE_FALSE(tc12_bruteforce(c7));
    auto r = recognize_tc12(c7);
    REQUIRE(r.no());
    CHECK(r.witness().catalog == "holes");
    CHECK(verify_no_certificate(c7, r.witness(), holes_catalog()));
}

TEST_CASE("exhaustive labeled graphs up to six vertices") {
    Tally t;
    for (int n = 0; n <= 6; ++n)
        for (unsigned long long code = 0; code < (1ULL << (n * (n - 1) / 2)); ++code) {
            Graph g = labeled_graph(n, code);
            check(g, recognize_tc12(g), t);
        }
    MESSAGE("yes " << t.yes << " no " << t.no << " promise " << t.promise << " fallbacks " << t.fallbacks);
    CHECK(t.yes > 1000);
}

TEST_CASE("random C4-free graphs agree with the oracle") {
    std::mt19937_64 rng(12);
    Tally t;
    int produced = 0;
    while (produced < 10000) {
        int n = std::uniform_int_distribution<int>(4, 16)(rng);
        Graph g;
        switch (produced % 3) {
            case 0: g = random_c4_free(rng, n, std::uniform_int_distribution<int>(n / 2, 3 * n)(rng)); break;
            case 1: g = random_chordal(rng, n); break;
            default: {
                auto s = random_tc12_shape(rng, n);
                if (!s) continue;
                g = *s;
            }
        }
        REQUIRE_FALSE(find_C4(g));
        check(g, recognize_tc12(g), t);
        ++produced;
    }
    MESSAGE("yes " << t.yes << " no " << t.no << " fallbacks " << t.fallbacks);
    CHECK(t.promise == 0);
    CHECK(t.yes > 1000);
    CHECK(t.no > 1000);
}

TEST_CASE("chordal graphs rarely leave the construction") {
    std::mt19937_64 rng(99);
    Tally t;
    int graphs = 20000, rescued = 0;
    for (int k = 0; k < graphs; ++k) {
        Graph g = random_chordal(rng, std::uniform_int_distribution<int>(4, 16)(rng));
        auto r = recognize_tc12(g);
        check(g, r, t);
        rescued += r.fallbacks > 0;
    }
    MESSAGE("rescued " << rescued << " of " << graphs);
    CHECK(t.promise == 0);
    CHECK(rescued * 200 < graphs);
}

TEST_CASE("the clique scan alone settles every failed round") {
    // With no oracle budget, a failed round can only be settled by the maximal-clique scan.
    std::mt19937_64 rng(41);
    Tally t;
    for (int k = 0; k < 3000; ++k) {
        int n = std::uniform_int_distribution<int>(4, 14)(rng);
        Graph g = k % 2 ? random_chordal(rng, n) : random_c4_free(rng, n, 2 * n);
        auto r = recognize_tc12(g, 0);
        check(g, r, t);
    }
    CHECK(t.promise == 0);
    Graph hard = parse_graph6("J?GOAwSOOy?");
    REQUIRE(tc12_bruteforce(hard));
    auto r = recognize_tc12(hard, 0);
    REQUIRE(r.yes());
    CHECK(verify_tc12_partition(hard, r.partition()));
}

TEST_CASE("arbitrary graphs: certificates verify and non-C4 answers are sound") {
    std::mt19937_64 rng(5);
    Tally t;
    for (int k = 0; k < 3000; ++k) {
        int n = std::uniform_int_distribution<int>(1, 14)(rng);
        Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
        check(g, recognize_tc12(g), t);
    }
    CHECK(t.promise > 0);
}

TEST_CASE("large split-like input") {
    std::mt19937_64 rng(3);
    int n = 2000;
    std::vector<std::pair<int, int>> e;
    int a = 200;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) e.emplace_back(i, j);
    for (int b = a; b + 1 < n; b += 2) e.emplace_back(b, b + 1);
    for (int b = a; b < n; b += 2) e.emplace_back(int(rng() % a), b);
    Graph g(n, e);
    auto r = recognize_tc12(g);
    REQUIRE(r.yes());
    CHECK(verify_tc12_partition(g, r.partition()));
}
