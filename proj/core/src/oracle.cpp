#include "mt/oracle.hpp"

#include <vector>

namespace mt {

namespace {

inline uint64_t bit(int v) { return uint64_t(1) << v; }

// Size-ordered scan: A misses at most a_slack vertices of A (per vertex), B has max degree b_deg.
struct Scan {
    const uint64_t* r;
    int n, a_slack, b_deg, k = 0;
    uint64_t all, found = 0;

    bool a_ok(uint64_t A) const {
        for (uint64_t x = A; x; x &= x - 1) {
            int a = __builtin_ctzll(x);
            if (__builtin_popcountll(A & ~r[a] & ~bit(a)) > a_slack) return false;
        }
        return true;
    }

    bool b_ok(uint64_t B, int u) const {
        uint64_t nb = r[u] & B;
        if (__builtin_popcountll(nb) > b_deg) return false;
        for (; nb; nb &= nb - 1)
            if (__builtin_popcountll(r[__builtin_ctzll(nb)] & B) > b_deg) return false;
        return true;
    }

    bool dfs(int v, uint64_t A, uint64_t known_b, int c) {
        if (c == k) {
            uint64_t B = all & ~A;
            for (uint64_t x = B; x; x &= x - 1)
                if (__builtin_popcountll(r[__builtin_ctzll(x)] & B) > b_deg) return false;
            found = A;
            return true;
        }
        for (int u = v; u <= n - (k - c); ++u) {
            uint64_t A2 = A | bit(u);
            if (a_ok(A2) && dfs(u + 1, A2, known_b, c + 1)) return true;
            known_b |= bit(u);
            if (!b_ok(known_b, u)) return false;
        }
        return false;
    }

    std::optional<uint64_t> run() {
        for (k = 0; k <= n; ++k)
            if (dfs(0, 0, 0, 0)) return found;
        return std::nullopt;
    }
};

std::vector<uint64_t> rows_checked(const Graph& g, int cap) {
    int limit = cap < 63 ? cap : 63;
    if (g.order() > limit)
        throw SizeError("oracle: order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(limit));
    std::vector<uint64_t> r(g.order());
    for (int v = 0; v < g.order(); ++v) r[v] = g.row64(v);
    return r;
}

std::optional<std::pair<VertexSet, VertexSet>> scan(const Graph& g, int cap, int a_slack, int b_deg) {
    auto r = rows_checked(g, cap);
    int n = g.order();
    Scan s{r.data(), n, a_slack, b_deg, 0, n == 64 ? ~uint64_t(0) : bit(n) - 1};
    auto A = s.run();
    if (!A) return std::nullopt;
    VertexSet a(n), b(n);
    for (int v = 0; v < n; ++v) ((*A >> v) & 1 ? a : b).insert(v);
    return std::make_pair(a, b);
}

struct Decide {
    const uint64_t* r;
    int n, a_slack, b_deg;

    bool rec(int i, uint64_t A, uint64_t B) const {
        if (i == n) return true;
        uint64_t non = A & ~r[i];
        if (__builtin_popcountll(non) <= a_slack) {
            bool ok = true;
            for (uint64_t x = non; x && ok; x &= x - 1) {
                int a = __builtin_ctzll(x);
                ok = __builtin_popcountll(A & ~r[a] & ~bit(a)) + 1 <= a_slack;
            }
            if (ok && rec(i + 1, A | bit(i), B)) return true;
        }
        uint64_t nb = B & r[i];
        if (__builtin_popcountll(nb) <= b_deg) {
            bool ok = true;
            for (uint64_t x = nb; x && ok; x &= x - 1) ok = __builtin_popcountll(r[__builtin_ctzll(x)] & B) + 1 <= b_deg;
            if (ok && rec(i + 1, A, B | bit(i))) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<MTPartition> mt_bruteforce(const Graph& g, int cap) {
    auto p = scan(g, cap, 1, 1);
    if (!p) return std::nullopt;
    return MTPartition{p->first, p->second};
}

std::optional<TC12Partition> tc12_bruteforce(const Graph& g, int cap) {
    auto p = scan(g, cap, 0, 1);
    if (!p) return std::nullopt;
    return TC12Partition{p->first, p->second};
}

std::optional<SplitPartition> split_bruteforce(const Graph& g, int cap) {
    auto p = scan(g, cap, 0, 0);
    if (!p) return std::nullopt;
    return SplitPartition{p->first, p->second};
}

bool is_minimal_obstruction(const Graph& g, const MembershipOracle& member) {
    if (member(g)) return false;
    int n = g.order();
    for (int v = 0; v < n; ++v) {
        std::vector<int> keep;
        for (int u = 0; u < n; ++u)
            if (u != v) keep.push_back(u);
        if (!member(induced_subgraph(g, keep).graph)) return false;
    }
    return true;
}

bool max_degree_le1(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && g.count_neighbors_in(v, s) <= 1; });
    return ok;
}

bool min_degree_ge_size_minus2(const Graph& g, const VertexSet& s) {
    int k = s.size();
    bool ok = true;
    s.for_each([&](int v) { ok = ok && g.count_neighbors_in(v, s) >= k - 2; });
    return ok;
}

bool decide_mt(const uint64_t* rows, int n) { return Decide{rows, n, 1, 1}.rec(0, 0, 0); }
bool decide_tc12(const uint64_t* rows, int n) { return Decide{rows, n, 0, 1}.rec(0, 0, 0); }
bool decide_split(const uint64_t* rows, int n) { return Decide{rows, n, 0, 0}.rec(0, 0, 0); }

bool is_member(GraphClass c, const Graph& g, int cap) {
    auto r = rows_checked(g, cap);
    switch (c) {
        case GraphClass::MT: return decide_mt(r.data(), g.order());
        case GraphClass::TC12: return decide_tc12(r.data(), g.order());
        case GraphClass::Split: return decide_split(r.data(), g.order());
    }
    return false;
}

MembershipOracle oracle_for(GraphClass c, int cap) {
    return [c, cap](const Graph& g) { return is_member(c, g, cap); };
}

}  // namespace mt
