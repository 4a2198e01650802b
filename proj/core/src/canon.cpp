#include "mt/canon.hpp"

#include <algorithm>

namespace mt {
namespace small {

namespace {

using Perm = std::array<int, kMax>;

struct Part {
    std::array<int, kMax> lab;
    uint32_t bound;  // bit i set when a cell starts at position i
};

struct UnionFind {
    std::array<int, kMax> p;
    explicit UnionFind(int n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

struct Search {
    const uint64_t* g;
    int n;
    uint32_t full;
    bool have = false;
    Rows best{};
    Perm best_lab{};
    std::vector<Perm> gens;
    Perm seq{};

    void refine(Part& p) const {
        for (;;) {
            int k = 0;
            std::array<uint64_t, kMax> masks{};
            for (int i = 0; i < n; ++i) {
                if ((p.bound >> i) & 1) ++k;
                masks[k - 1] |= uint64_t(1) << p.lab[i];
            }
            if (k == n) return;
            std::array<uint64_t, kMax> sig{};
            for (int v = 0; v < n; ++v) {
                uint64_t s = 0;
                for (int c = 0; c < k; ++c) s = (s << 4) | uint64_t(__builtin_popcountll(g[v] & masks[c]));
                sig[v] = s;
            }
            bool changed = false;
            for (int a = 0; a < n;) {
                int b = a + 1;
                while (b < n && !((p.bound >> b) & 1)) ++b;
                if (b - a > 1) {
                    for (int i = a + 1; i < b; ++i) {
                        int v = p.lab[i], j = i;
                        while (j > a && sig[p.lab[j - 1]] > sig[v]) {
                            p.lab[j] = p.lab[j - 1];
                            --j;
                        }
                        p.lab[j] = v;
                    }
                    for (int i = a + 1; i < b; ++i)
                        if (sig[p.lab[i]] != sig[p.lab[i - 1]]) {
                            p.bound |= 1u << i;
                            changed = true;
                        }
                }
                a = b;
            }
            if (!changed) return;
        }
    }

    void leaf(const Part& p) {
        std::array<int, kMax> pos{};
        for (int i = 0; i < n; ++i) pos[p.lab[i]] = i;
        Rows r{};
        int cmp = have ? 0 : -1;
        for (int i = 0; i < n; ++i) {
            uint64_t row = 0;
            for (uint64_t x = g[p.lab[i]]; x; x &= x - 1) row |= uint64_t(1) << pos[__builtin_ctzll(x)];
            r[i] = row;
            if (cmp == 0 && row != best[i]) {
                cmp = row < best[i] ? -1 : 1;
                if (cmp > 0) return;
            }
        }
        if (cmp < 0) {
            best = r;
            best_lab = p.lab;
            have = true;
        } else if (gens.size() < 64) {
            Perm gamma{};
            bool identity = true;
            for (int i = 0; i < n; ++i) {
                gamma[p.lab[i]] = best_lab[i];
                identity = identity && p.lab[i] == best_lab[i];
            }
            if (!identity) gens.push_back(gamma);
        }
    }

    void search(Part p, int depth) {
        refine(p);
        if (p.bound == full) {
            leaf(p);
            return;
        }
        int a = 0;
        while (true) {
            int b = a + 1;
            while (b < n && !((p.bound >> b) & 1)) ++b;
            if (b - a > 1) break;
            a = b;
        }
        int b = a + 1;
        while (b < n && !((p.bound >> b) & 1)) ++b;
        std::array<int, kMax> cand{};
        int nc = b - a;
        for (int i = 0; i < nc; ++i) cand[i] = p.lab[a + i];
        std::sort(cand.begin(), cand.begin() + nc);
        std::array<int, kMax> tried{};
        int nt = 0;
        for (int ci = 0; ci < nc; ++ci) {
            int u = cand[ci];
            if (nt > 0) {
                UnionFind uf(n);
                for (const auto& gm : gens) {
                    bool fixes = true;
                    for (int d = 0; d < depth && fixes; ++d) fixes = gm[seq[d]] == seq[d];
                    if (!fixes) continue;
                    for (int v = 0; v < n; ++v) uf.unite(v, gm[v]);
                }
                bool skip = false;
                for (int t = 0; t < nt && !skip; ++t) skip = uf.find(u) == uf.find(tried[t]);
                if (skip) continue;
            }
            Part q = p;
            int at = a;
            while (q.lab[at] != u) ++at;
            for (int i = at; i > a; --i) q.lab[i] = q.lab[i - 1];
            q.lab[a] = u;
            q.bound |= 1u << (a + 1);
            seq[depth] = u;
            search(q, depth + 1);
            tried[nt++] = u;
        }
    }
};

}  // namespace

void canonicalize(const uint64_t* rows, int n, Canon& out) {
    if (n > kMax) throw SizeError("canonical labeling supports at most 16 vertices");
    out.n = n;
    out.rows.fill(0);
    if (n == 0) return;
    Search s;
    s.g = rows;
    s.n = n;
    s.full = (1u << n) - 1;
    // Twin transpositions are automorphisms known up front.
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            uint64_t mu = rows[u] & ~(uint64_t(1) << w), mw = rows[w] & ~(uint64_t(1) << u);
            if (mu == mw) {
                Perm t{};
                for (int v = 0; v < n; ++v) t[v] = v;
                t[u] = w;
                t[w] = u;
                s.gens.push_back(t);
                break;
            }
        }
    Part p{};
    for (int i = 0; i < n; ++i) p.lab[i] = i;
    // Seed cells by degree so the first refinement round starts from a useful split.
    std::sort(p.lab.begin(), p.lab.begin() + n, [&](int a, int b) {
        return __builtin_popcountll(rows[a]) < __builtin_popcountll(rows[b]);
    });
    p.bound = 1;
    for (int i = 1; i < n; ++i)
        if (__builtin_popcountll(rows[p.lab[i]]) != __builtin_popcountll(rows[p.lab[i - 1]])) p.bound |= 1u << i;
    s.search(p, 0);
    out.rows = s.best;
    out.lab = s.best_lab;
    UnionFind uf(n);
    for (const auto& gm : s.gens)
        for (int v = 0; v < n; ++v) uf.unite(v, gm[v]);
    for (int v = 0; v < n; ++v) out.orbit[v] = uf.find(v);
}

Rows rows_of(const Graph& g) {
    if (g.order() > kMax) throw SizeError("small graph rows support at most 16 vertices");
    Rows r{};
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v)) r[v] |= uint64_t(1) << u;
    return r;
}

Graph to_graph(const uint64_t* rows, int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (uint64_t x = rows[v] >> (v + 1); x; x &= x - 1) e.emplace_back(v, v + 1 + __builtin_ctzll(x));
    return Graph(n, e);
}

Key pack(const uint64_t* rows, int n) {
    Key k;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) k.bits = (k.bits << 1) | ((rows[i] >> j) & 1);
    k.bits |= (unsigned __int128)(n) << 123;
    return k;
}

}  // namespace small

std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder)
        throw SizeError("canonical form supports at most " + std::to_string(kCanonicalMaxOrder) + " vertices");
    auto rows = small::rows_of(g);
    small::Canon c;
    small::canonicalize(rows.data(), g.order(), c);
    return std::vector<int>(c.lab.begin(), c.lab.begin() + g.order());
}

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder)
        throw SizeError("canonical form supports at most " + std::to_string(kCanonicalMaxOrder) + " vertices");
    auto rows = small::rows_of(g);
    small::Canon c;
    small::canonicalize(rows.data(), g.order(), c);
    return write_graph6(small::to_graph(c.rows.data(), g.order()));
}

bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace mt
