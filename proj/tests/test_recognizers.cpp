#include <map>
#include <set>

#include "doctest.h"
#include "mt/catalog.hpp"
#include "mt/recognizers.hpp"
#include "mt/verify.hpp"
#include "support.hpp"

using namespace mt;
using namespace testing_support;

namespace {

bool yes(const RecognitionResult& r) { return r.verdict == Verdict::Yes; }
bool no(const RecognitionResult& r) { return r.verdict == Verdict::No; }

const NoCertificate& witness(const RecognitionResult& r) { return std::get<NoCertificate>(r.certificate); }

// Decided, verified, and in agreement with the oracle.
void agree(const Graph& g, const RecognitionResult& r) {
    CAPTURE(write_graph6(g));
    CAPTURE(r.route);
    REQUIRE(r.verdict != Verdict::Undecided);
    Check c = verify_result(g, r, GraphClass::MT);
    CAPTURE(c.describe());
    REQUIRE(c);
    REQUIRE(yes(r) == mt_bruteforce(g).has_value());
}

}  // namespace

TEST_CASE("tree examples") {
    auto r = recognize_mt_tree(star_graph(6));
    REQUIRE(yes(r));
    CHECK(std::get<MTPartition>(r.certificate).A == VertexSet(7, {0}));

    r = recognize_mt_tree(path_graph(9));
    REQUIRE(no(r));
    CHECK(witness(r).obstruction_id == "ll-ll");
    CHECK(verify_result(path_graph(9), r, GraphClass::MT));

    // center, three children, two leaves each
    Graph s(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}});
    r = recognize_mt_tree(s);
    REQUIRE(no(r));
    CHECK(witness(r).obstruction_id == "eps");

    CHECK_THROWS_AS(recognize_mt_tree(cycle_graph(4)), PreconditionError);
    CHECK(yes(recognize_mt_tree(Graph(1))));
    CHECK(yes(recognize_mt_tree(path_graph(2))));
}

TEST_CASE("every free tree up to twelve vertices") {
    auto levels = free_trees(12);
    CHECK(levels[10].size() == 106);
    CHECK(levels[12].size() == 551);
    std::set<std::string> ids;
    int non = 0;
    for (int k = 1; k <= 12; ++k)
        for (const auto& t : levels[k]) {
            auto r = recognize_mt_tree(t);
            agree(t, r);
            if (no(r)) {
                ++non;
                ids.insert(witness(r).obstruction_id);
            }
        }
    CHECK(non > 0);
    CHECK(ids.size() >= 8);
}

TEST_CASE("random trees agree with the oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        Graph t = random_tree(rng, std::uniform_int_distribution<int>(1, 18)(rng));
        agree(t, recognize_mt_tree(t));
    }
}

TEST_CASE("large random trees produce verifying certificates") {
    std::mt19937_64 rng(12);
    for (int n : {1000, 20000, 100000}) {
        Graph t = random_tree(rng, n);
        auto r = recognize_mt_tree(t);
        CHECK(no(r));  // long paths appear quickly
        CHECK(verify_result(t, r, GraphClass::MT));
    }
    // caterpillar-free shapes stay yes at scale
    Graph big = spider(30000, 2);
    auto r = recognize_mt_tree(big);
    REQUIRE(yes(r));
    CHECK(verify_result(big, r, GraphClass::MT));
}

TEST_CASE("forests") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 3000; ++i) {
        int n = std::uniform_int_distribution<int>(2, 16)(rng);
        Graph f = random_tree(rng, n);
        auto e = f.edges();
        std::shuffle(e.begin(), e.end(), rng);
        e.resize(e.size() - std::min<std::size_t>(e.size(), std::uniform_int_distribution<int>(1, 3)(rng)));
        Graph g(n, e);
        agree(g, recognize_mt_forest(g));
    }
}

TEST_CASE("nice components") {
    CHECK(is_nice(complete_graph(3)) == 0);
    CHECK(is_nice(star_graph(5)) == 0);
    CHECK(is_nice(spider(4, 2)) == 0);
    CHECK_FALSE(is_nice(path_graph(6)));
    CHECK(is_nice(path_graph(5)) == 2);
    CHECK_FALSE(is_nice(cycle_graph(4)));
    CHECK(is_nice(cycle_graph(5)) == std::nullopt);
    // leaf joined back to the center
    CHECK(is_nice(Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}})) == 0);
    CHECK_THROWS(is_nice(Graph(2)));

    // oracle: nice iff some vertex leaves maximum degree at most one
    std::mt19937_64 rng(14);
    for (int i = 0; i < 3000; ++i) {
        Graph g = random_graph(rng, std::uniform_int_distribution<int>(1, 8)(rng), 0.35);
        if (!is_connected(g)) continue;
        std::optional<int> expect;
        for (int v = 0; v < g.order() && !expect; ++v) {
            VertexSet rest = VertexSet::full(g.order());
            rest.erase(v);
            if (max_degree_le1(g, rest)) expect = v;
        }
        CHECK(is_nice(g) == expect);
    }
}

TEST_CASE("disconnected examples") {
    auto solver = [](const Graph& h) { return recognize(h, Mode::Auto); };
    Graph k3 = complete_graph(3);
    auto r = recognize_mt_disconnected(union_of({k3, k3, k3}), solver);
    REQUIRE(no(r));
    CHECK(witness(r).obstruction_id == "3K3");

    Graph g = union_of({k3, k3, path_graph(2), path_graph(2), path_graph(2), path_graph(2), path_graph(2)});
    r = recognize_mt_disconnected(g, solver);
    REQUIRE(yes(r));
    CHECK(std::get<MTPartition>(r.certificate).A.size() == 2);

    g = union_of({cycle_graph(6), k3});
    r = recognize_mt_disconnected(g, solver);
    REQUIRE(no(r));
    CHECK(witness(r).catalog == "fdisc");
    CHECK(verify_result(g, r, GraphClass::MT));

    CHECK_THROWS(recognize_mt_disconnected(k3, solver));
}

TEST_CASE("disconnected graphs agree with the oracle") {
    std::mt19937_64 rng(15);
    auto solver = [](const Graph& h) { return recognize(h, Mode::Auto); };
    int count = 0, nos = 0;
    while (count < 4000) {
        int parts = std::uniform_int_distribution<int>(2, 4)(rng);
        Graph g(0);
        for (int p = 0; p < parts; ++p)
            g = disjoint_union(g, random_graph(rng, std::uniform_int_distribution<int>(1, 6)(rng), 0.5));
        g = random_relabel(rng, g);
        if (is_connected(g) || g.order() > 18) continue;
        ++count;
        auto r = recognize_mt_disconnected(g, solver);
        agree(g, r);
        if (no(r) && std::holds_alternative<NoCertificate>(r.certificate)) {
            ++nos;
            CHECK((witness(r).catalog == "fdisc" || r.route != "disconnected"));
        }
    }
    CHECK(nos > 100);
}

TEST_CASE("C4-free examples") {
    auto r = recognize_mt_c4free(cycle_graph(5));
    REQUIRE(yes(r));
    CHECK(verify_result(cycle_graph(5), r, GraphClass::MT));

    Graph g = union_of({path_graph(6), path_graph(3)});
    r = recognize_mt_c4free(g);
    REQUIRE(no(r));
    CHECK(verify_result(g, r, GraphClass::MT));

    Graph split(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {0, 4}});
    CHECK(yes(recognize_mt_c4free(split)));

    try {
        recognize_mt_c4free(cycle_graph(4));
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        REQUIRE(e.witness());
        CHECK(e.witness()->obstruction_id == "C4");
        CHECK(verify_no_certificate(cycle_graph(4), *e.witness(), f_catalog()));
    }
}

TEST_CASE("exhaustive labeled C4-free graphs up to six vertices") {
    for (int n = 1; n <= 6; ++n)
        for (unsigned long long code = 0; code < (1ULL << (n * (n - 1) / 2)); ++code) {
            Graph g = labeled_graph(n, code);
            if (find_C4(g)) continue;
            agree(g, recognize_mt_c4free(g));
        }
}

TEST_CASE("random C4-free graphs agree with the oracle") {
    std::mt19937_64 rng(16);
    int nos = 0;
    for (int i = 0; i < 10000; ++i) {
        int n = std::uniform_int_distribution<int>(1, 18)(rng);
        Graph g = i % 3 == 0 ? random_chordal(rng, n)
                             : random_c4_free(rng, n, std::uniform_int_distribution<int>(n / 2, 3 * n)(rng));
        auto r = recognize_mt_c4free(g);
        agree(g, r);
        nos += no(r);
    }
    CHECK(nos > 300);
}

TEST_CASE("type partition and twin reduction") {
    auto tp = type_partition(complete_graph(7));
    REQUIRE(tp.classes.size() == 1);
    CHECK(tp.classes[0].tag == TypeClass::TrueTwin);
    CHECK(twin_reduce(complete_graph(7)).kernel == complete_graph(4));
    CHECK(twin_reduce(complete_graph(7), 3).kernel == complete_graph(3));

    auto c5 = twin_reduce(cycle_graph(5));
    CHECK(c5.types.classes.size() == 5);
    CHECK(c5.kernel == cycle_graph(5));

    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 4; ++i)
        for (int j = 4; j < 8; ++j) e.emplace_back(i, j);
    Graph k44(8, e);
    auto k33 = twin_reduce(k44, 3);
    REQUIRE(k33.types.classes.size() == 2);
    CHECK(k33.types.classes[0].tag == TypeClass::FalseTwin);
    CHECK(k33.kernel.order() == 6);
    CHECK(k33.kernel.size() == 9);
    CHECK(twin_reduce(k44).kernel == k44);

    // three per class is not enough
    CHECK_FALSE(mt_bruteforce(k44));
    CHECK(mt_bruteforce(k33.kernel));
    Graph k4k3 = union_of({complete_graph(4), complete_graph(3)});
    CHECK_FALSE(mt_bruteforce(k4k3));
    CHECK(mt_bruteforce(twin_reduce(k4k3, 3).kernel));

    // definition check: same class iff N(u) - v = N(v) - u
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        Graph g = random_graph(rng, std::uniform_int_distribution<int>(1, 10)(rng), 0.5);
        auto t = type_partition(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                VertexSet nu = g.neighborhood(u), nv = g.neighborhood(v);
                nu.erase(v);
                nv.erase(u);
                CHECK((t.class_of[u] == t.class_of[v]) == (nu == nv));
            }
        for (const auto& c : t.classes)
            if (c.members.size() >= 2)
                CHECK(g.adjacent(c.members[0], c.members[1]) == (c.tag == TypeClass::TrueTwin));
    }
}

TEST_CASE("twin reduction preserves the verdict on planted classes") {
    std::mt19937_64 rng(18);
    int mixed = 0;
    std::set<bool> seen;
    for (int i = 0; i < 1000; ++i) {
        auto planted = planted_twin_graph(rng, 16);
        if (!planted) continue;
        const Graph& g = *planted;
        auto k = twin_reduce(g);
        CHECK(k.kernel.order() <= 4 * int(k.types.classes.size()));
        bool full = mt_bruteforce(g).has_value();
        CHECK(full == mt_bruteforce(k.kernel).has_value());
        seen.insert(full);
        ++mixed;
        agree(g, recognize_mt_bounded_nd(g));
    }
    CHECK(mixed > 500);
    CHECK(seen.size() == 2);
}

TEST_CASE("bounded neighbourhood diversity examples") {
    auto r = recognize_mt_bounded_nd(complete_graph(100));
    REQUIRE(yes(r));
    CHECK(std::get<MTPartition>(r.certificate).A.size() >= 98);

    Graph m(0);
    for (int i = 0; i < 50; ++i) m = disjoint_union(m, path_graph(2));
    r = recognize_mt_bounded_nd(m);
    REQUIRE(yes(r));
    CHECK(verify_result(m, r, GraphClass::MT));

    Graph g = union_of({graph_3p3(), Graph(100)});
    r = recognize_mt_bounded_nd(g);
    REQUIRE(no(r));
    REQUIRE(std::holds_alternative<NoCertificate>(r.certificate));
    CHECK(witness(r).obstruction_id == "3P3");
    CHECK(verify_result(g, r, GraphClass::MT));
}

TEST_CASE("cographs") {
    Graph g = union_of({complete_graph(4), complete_graph(3)});
    auto r = recognize_mt_cograph(g);
    REQUIRE(no(r));
    CHECK(witness(r).obstruction_id == "K4+K3");

    Graph co = complement(graph_3p3());
    r = recognize_mt_cograph(co);
    REQUIRE(no(r));
    CHECK(witness(r).catalog == "fcog");
    CHECK(verify_result(co, r, GraphClass::MT));

    CHECK_THROWS_AS(recognize_mt_cograph(path_graph(4)), PreconditionError);

    for (int n = 1; n <= 7; ++n)
        for (unsigned long long code = 0; code < (1ULL << (n * (n - 1) / 2)); code += (n == 7 ? 7 : 1)) {
            Graph h = labeled_graph(n, code);
            if (!is_cograph(h)) continue;
            agree(h, recognize_mt_cograph(h));
        }
}

TEST_CASE("oracle witnesses are minimal and verify") {
    std::mt19937_64 rng(19);
    int named = 0, unnamed = 0;
    for (int i = 0; i < 400; ++i) {
        Graph g = random_graph(rng, std::uniform_int_distribution<int>(7, 14)(rng), 0.45);
        for (GraphClass cls : {GraphClass::MT, GraphClass::TC12, GraphClass::Split}) {
            auto w = oracle_witness(g, cls);
            CHECK(w.has_value() == !is_member(cls, g));
            if (!w) continue;
            CHECK(verify_witness(g, *w, cls));
            (w->catalog == "oracle" ? unnamed : named)++;
        }
    }
    CHECK(named > 0);
    CHECK(unnamed > 0);

    NoCertificate bad{"x", {0, 1, 2}, NoKind::Obstruction, "oracle"};
    CHECK_FALSE(verify_witness(path_graph(3), bad, GraphClass::MT));
    NoCertificate wrong_catalog{"2K2", {0, 1, 2, 3}, NoKind::Obstruction, "split"};
    CHECK_FALSE(verify_witness(union_of({path_graph(2), path_graph(2)}), wrong_catalog, GraphClass::MT));
}

TEST_CASE("auto dispatch agrees with the oracle and certificates verify") {
    std::mt19937_64 rng(20);
    std::map<std::string, int> routes;
    for (int i = 0; i < 10000; ++i) {
        int n = std::uniform_int_distribution<int>(0, 14)(rng);
        double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
        Graph g = random_graph(rng, n, p);
        auto r = recognize(g, Mode::Auto);
        agree(g, r);
        ++routes[r.route.substr(0, r.route.find('/'))];
    }
    for (const char* route : {"tree", "c4free", "cograph", "nd", "disconnected"}) {
        CAPTURE(route);
        CHECK(routes[route] > 0);
    }
}

TEST_CASE("mode dispatch") {
    CHECK(parse_mode("c4free") == Mode::C4Free);
    CHECK_FALSE(parse_mode("bogus"));
    for (Mode m : {Mode::Auto, Mode::Oracle, Mode::Tree, Mode::Forest, Mode::C4Free, Mode::Cograph, Mode::Nd,
                   Mode::Split, Mode::TC12})
        CHECK(parse_mode(mode_name(m)) == m);

    auto r = recognize(cycle_graph(5), Mode::Split);
    REQUIRE(no(r));
    CHECK(witness(r).obstruction_id == "C5");
    r = recognize(fig1_graph(), Mode::Oracle);
    REQUIRE(yes(r));
    CHECK(verify_result(fig1_graph(), r, GraphClass::MT));
    CHECK_THROWS_AS(recognize(cycle_graph(5), Mode::Forest), PreconditionError);
    r = recognize(complete_graph(30), Mode::Oracle);
    CHECK(r.verdict == Verdict::Undecided);
}
