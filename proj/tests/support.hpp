#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mt/canon.hpp"
#include "mt/graph.hpp"

namespace testing_support {

using mt::Graph;

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> e) {
    return Graph(n, std::vector<std::pair<int, int>>(e));
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph random_tree(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [a, b] : e) a = perm[a], b = perm[b];
    return Graph(n, e);
}

// Random C4-free graph: edges are offered in random order and kept when no C4 appears.
inline Graph random_c4_free(std::mt19937_64& rng, int n, int offers) {
    std::vector<std::pair<int, int>> all, kept;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    std::shuffle(all.begin(), all.end(), rng);
    for (int t = 0; t < offers && t < int(all.size()); ++t) {
        kept.push_back(all[t]);
        if (mt::find_C4(Graph(n, kept))) kept.pop_back();
    }
    return Graph(n, kept);
}

// Intersection graph of random subtrees of a random tree; always chordal.
inline Graph random_chordal(std::mt19937_64& rng, int n) {
    int h = std::uniform_int_distribution<int>(2, 2 * n)(rng);
    Graph host = random_tree(rng, h);
    std::vector<mt::VertexSet> sub;
    for (int v = 0; v < n; ++v) {
        mt::VertexSet s(h);
        s.insert(std::uniform_int_distribution<int>(0, h - 1)(rng));
        int grow = std::uniform_int_distribution<int>(0, 3)(rng);
        for (int k = 0; k < grow; ++k) {
            auto ms = s.members();
            int x = ms[std::uniform_int_distribution<int>(0, int(ms.size()) - 1)(rng)];
            const auto& nb = host.neighbors(x);
            if (!nb.empty()) s.insert(nb[std::uniform_int_distribution<int>(0, int(nb.size()) - 1)(rng)]);
        }
        sub.push_back(s);
    }
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (sub[u].intersects(sub[v])) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph random_relabel(std::mt19937_64& rng, const Graph& g) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return mt::relabel(g, perm);
}

// A random base graph on 2-5 vertices with one or two vertices blown up into twin
// classes of 4-8 (true or false twins), randomly relabeled. Empty above max_n vertices.
inline std::optional<Graph> planted_twin_graph(std::mt19937_64& rng, int max_n) {
    int base = std::uniform_int_distribution<int>(2, 5)(rng);
    Graph h = random_graph(rng, base, 0.5);
    std::vector<int> size(base, 1);
    std::vector<bool> clique(base, false);
    for (int k = 0; k < 2; ++k) {
        int v = std::uniform_int_distribution<int>(0, base - 1)(rng);
        size[v] = std::uniform_int_distribution<int>(4, 8)(rng);
        clique[v] = std::bernoulli_distribution(0.5)(rng);
    }
    std::vector<int> owner;
    for (int v = 0; v < base; ++v)
        for (int c = 0; c < size[v]; ++c) owner.push_back(v);
    int n = int(owner.size());
    if (n > max_n) return std::nullopt;
    std::vector<std::pair<int, int>> e;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (owner[x] == owner[y] ? clique[owner[x]] : h.adjacent(owner[x], owner[y])) e.emplace_back(x, y);
    return random_relabel(rng, Graph(n, e));
}

// Free trees up to n vertices, one per isomorphism class, by growing leaves.
inline std::vector<std::vector<Graph>> free_trees(int n) {
    std::vector<std::vector<Graph>> levels(n + 1);
    levels[1] = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::set<mt::CanonicalForm> seen;
        for (const auto& t : levels[k - 1])
            for (int v = 0; v < k - 1; ++v) {
                auto e = t.edges();
                e.emplace_back(v, k - 1);
                Graph g(k, e);
                if (seen.insert(mt::canonical_form(g)).second) levels[k].push_back(g);
            }
    }
    return levels;
}

inline Graph spider(int legs, int length) {
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int s = 0; s < length; ++s) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, e);
}

// Random cograph by repeated disjoint union or join with a single vertex or a smaller cograph.
inline Graph random_cograph(std::mt19937_64& rng, int n) {
    if (n <= 1) return Graph(n);
    int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
    Graph a = random_cograph(rng, k), b = random_cograph(rng, n - k);
    Graph u = mt::disjoint_union(a, b);
    if (std::bernoulli_distribution(0.5)(rng)) return u;
    return mt::complement(mt::disjoint_union(mt::complement(a), mt::complement(b)));
}

// Labeled graph number `code` on n vertices, bits in upper-triangle column order.
inline Graph labeled_graph(int n, unsigned long long code) {
    std::vector<std::pair<int, int>> e;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((code >> k) & 1) e.emplace_back(i, j);
    return Graph(n, e);
}

// Independent isomorphism invariant: least upper-triangle code over all n! relabelings.
inline unsigned long long naive_canon(const Graph& g) {
    int n = g.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    unsigned long long best = ~0ULL;
    do {
        unsigned long long code = 0;
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if (g.adjacent(p[i], p[j])) code |= 1ULL << k;
        best = std::min(best, code);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// Figure graph: A = a0,a1,a2 (0..2), B = b0..b4 (3..7).
enum Fig1 { a0 = 0, a1, a2, b0, b1, b2, b3, b4 };
inline Graph fig1_graph() {
    return from_edges(8, {{a0, a2}, {a1, a2}, {b0, b1}, {b3, b4}, {b0, a1}, {b1, a0}, {b2, a0}, {b2, a1}, {b4, a2}});
}

inline Graph union_of(std::initializer_list<Graph> parts) {
    Graph g(0);
    for (const auto& p : parts) g = mt::disjoint_union(g, p);
    return g;
}

// Exhaustive subset-and-permutation scan for an induced copy of `pattern`.
inline bool brute_contains(const Graph& pattern, const Graph& host) {
    int k = pattern.order(), n = host.order();
    if (k > n) return false;
    std::vector<int> sel(n, 0);
    std::fill(sel.end() - k, sel.end(), 1);
    do {
        std::vector<int> vs;
        for (int i = 0; i < n; ++i)
            if (sel[i]) vs.push_back(i);
        std::vector<int> p(k);
        std::iota(p.begin(), p.end(), 0);
        do {
            bool ok = true;
            for (int a = 0; a < k && ok; ++a)
                for (int b = a + 1; b < k && ok; ++b)
                    ok = pattern.adjacent(a, b) == host.adjacent(vs[p[a]], vs[p[b]]);
            if (ok) return true;
        } while (std::next_permutation(p.begin(), p.end()));
    } while (std::next_permutation(sel.begin(), sel.end()));
    return false;
}

// Raw definition check over every subset A; slack = allowed non-neighbours per A-vertex,
// bdeg = allowed B-degree. Returns the least A (by size, then lexicographically) or -1.
inline long long naive_partition(const Graph& g, int slack, int bdeg) {
    int n = g.order();
    std::vector<unsigned long long> masks;
    for (unsigned long long m = 0; m < (1ULL << n); ++m) masks.push_back(m);
    auto key = [n](unsigned long long m) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1) v.push_back(i);
        return std::make_pair(v.size(), v);
    };
    std::sort(masks.begin(), masks.end(), [&](auto a, auto b) { return key(a) < key(b); });
    for (auto m : masks) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            bool in_a = (m >> v) & 1;
            int same = 0, miss = 0;
            for (int u = 0; u < n; ++u) {
                if (u == v || bool((m >> u) & 1) != in_a) continue;
                if (g.adjacent(u, v)) ++same;
                else ++miss;
            }
            ok = in_a ? miss <= slack : same <= bdeg;
        }
        if (ok) return (long long)m;
    }
    return -1;
}

inline bool naive_mt(const Graph& g) { return naive_partition(g, 1, 1) >= 0; }
inline bool naive_tc12(const Graph& g) { return naive_partition(g, 0, 1) >= 0; }
inline bool naive_split(const Graph& g) { return naive_partition(g, 0, 0) >= 0; }

}  // namespace testing_support
