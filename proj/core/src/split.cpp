#include "mt/split.hpp"

namespace mt {

namespace {

struct Threshold {
    std::vector<int> order;  // vertices by non-increasing degree
    int m = 0;               // size of the clique side
    bool split = false;
};

Threshold threshold(const Graph& g) {
    int n = g.order();
    Threshold t;
    std::vector<int> count(n + 1, 0);
    for (int v = 0; v < n; ++v) ++count[g.degree(v)];
    std::vector<int> start(n + 2, 0);
    for (int d = n - 1; d >= 0; --d) start[d] = start[d + 1] + count[d + 1];
    t.order.resize(n);
    for (int v = 0; v < n; ++v) t.order[start[g.degree(v)]++] = v;
    for (int i = 1; i <= n; ++i)
        if (g.degree(t.order[i - 1]) >= i - 1) t.m = i;
    long long lhs = 0, rhs = (long long)t.m * (t.m - 1);
    for (int i = 0; i < n; ++i) (i < t.m ? lhs : rhs) += g.degree(t.order[i]);
    t.split = lhs == rhs;
    return t;
}

// First listed edge uv with another edge outside N[u] and N[v].
std::optional<std::vector<int>> two_k2_through(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                                               std::vector<long long>& mark, long long& stamp) {
    int n = g.order();
    for (auto [u, v] : edges) {
        ++stamp;
        mark[u] = mark[v] = stamp;
        for (int x : g.neighbors(u)) mark[x] = stamp;
        for (int x : g.neighbors(v)) mark[x] = stamp;
        for (int x = 0; x < n; ++x) {
            if (mark[x] == stamp) continue;
            for (int y : g.neighbors(x))
                if (mark[y] != stamp) return std::vector<int>{u, v, x, y};
        }
    }
    return std::nullopt;
}

// Cycle x-y-b-c-a when xy is an edge, the only shape left once 2K2 and C4 are absent.
std::optional<std::vector<int>> c5_through_edge(const Graph& g, int x, int y) {
    for (int a : g.neighbors(x)) {
        if (a == y || g.adjacent(a, y)) continue;
        for (int b : g.neighbors(y)) {
            if (b == x || g.adjacent(b, x) || g.adjacent(a, b)) continue;
            for (int c : g.neighbors(a))
                if (c != x && g.adjacent(c, b) && !g.adjacent(c, x) && !g.adjacent(c, y))
                    return std::vector<int>{x, y, b, c, a};
        }
    }
    return std::nullopt;
}

// Cycle u-c-v-b-a when u, v are non-adjacent.
std::optional<std::vector<int>> c5_through_non_edge(const Graph& g, int u, int v) {
    for (int a : g.neighbors(u)) {
        if (g.adjacent(a, v)) continue;
        for (int b : g.neighbors(a)) {
            if (b == u || !g.adjacent(b, v) || g.adjacent(b, u)) continue;
            for (int c : g.neighbors(u))
                if (c != a && g.adjacent(c, v) && !g.adjacent(c, a) && !g.adjacent(c, b))
                    return std::vector<int>{u, c, v, b, a};
        }
    }
    return std::nullopt;
}

bool induces(const Graph& g, const std::vector<int>& w, const Graph& pattern) {
    for (int i = 0; i < pattern.order(); ++i)
        for (int j = i + 1; j < pattern.order(); ++j)
            if (g.adjacent(w[i], w[j]) != pattern.adjacent(i, j)) return false;
    return true;
}

}  // namespace

bool is_split(const Graph& g) { return threshold(g).split; }

SplitResult recognize_split(const Graph& g) {
    int n = g.order();
    Threshold t = threshold(g);
    VertexSet K(n), S(n);
    for (int i = 0; i < n; ++i) (i < t.m ? K : S).insert(t.order[i]);
    if (t.split) return {SplitPartition{K, S}};

    SplitResult r{NoCertificate{}};
    auto no = [&](std::string id, std::vector<int> w) {
        r.outcome = NoCertificate{std::move(id), std::move(w), NoKind::Obstruction, "split"};
        return r;
    };

    // Edges inside S are the likeliest to sit in a 2K2, so they go first.
    std::vector<std::pair<int, int>> inside, rest;
    for (auto [u, v] : g.edges()) (S.contains(u) && S.contains(v) ? inside : rest).emplace_back(u, v);
    std::vector<long long> mark(n, -1);
    long long stamp = 0;
    if (auto w = two_k2_through(g, inside, mark, stamp)) return no("2K2", *w);
    if (auto w = two_k2_through(g, rest, mark, stamp)) return no("2K2", *w);
    if (auto w = find_C4(g)) return no("C4", *w);

    Graph c5 = cycle_graph(5);
    std::optional<std::vector<int>> w;
    if (!inside.empty()) {
        w = c5_through_edge(g, inside[0].first, inside[0].second);
    } else {
        auto ks = K.members();
        bool tried = false;
        for (std::size_t i = 0; i < ks.size() && !tried; ++i)
            for (std::size_t j = i + 1; j < ks.size() && !tried; ++j)
                if (!g.adjacent(ks[i], ks[j])) {
                    w = c5_through_non_edge(g, ks[i], ks[j]);
                    tried = true;
                }
    }
    if (!w || !induces(g, *w, c5)) {
        r.used_fallback = true;
        w = find_induced(c5, g);
        if (!w) throw std::logic_error("split recognition: non-split graph without 2K2, C4 or C5");
    }
    return no("C5", *w);
}

RecognitionResult to_recognition_result(const SplitResult& r) {
    RecognitionResult out;
    out.route = "split";
    if (r.is_split()) {
        out.verdict = Verdict::Yes;
        out.certificate = r.partition();
    } else {
        out.verdict = Verdict::No;
        out.certificate = r.witness();
    }
    if (r.used_fallback) out.note = "C5 located by pattern search";
    return out;
}

}  // namespace mt
