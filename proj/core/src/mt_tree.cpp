#include <algorithm>
#include <array>

#include "mt/catalog.hpp"
#include "mt/recognizers.hpp"

namespace mt {

namespace {

// In a forest an MT-side A is K1, K2, 2K1 or P3 (four vertices would need a cycle),
// and F - A has maximum degree at most 1 exactly when A meets every P3.
// Branching on an unmet P3 is therefore exact, with at most 1 + 3 + 9 + 27 nodes.
struct Hitting {
    const Graph& g;
    std::vector<char> inA;
    std::vector<int> A;
    std::vector<std::array<int, 3>> met;

    explicit Hitting(const Graph& f) : g(f), inA(f.order(), 0) {}

    std::optional<std::array<int, 3>> unmet() const {
        for (int v = 0; v < g.order(); ++v) {
            if (inA[v] || g.degree(v) < 2) continue;
            int a = -1;
            for (int u : g.neighbors(v)) {
                if (inA[u]) continue;
                if (a < 0)
                    a = u;
                else
                    return std::array<int, 3>{a, v, u};
            }
        }
        return std::nullopt;
    }

    bool shape_ok() const {
        if (A.size() < 3) return true;
        return g.adjacent(A[0], A[1]) + g.adjacent(A[0], A[2]) + g.adjacent(A[1], A[2]) == 2;
    }

    bool search() {
        auto p = unmet();
        if (!p) return true;
        met.push_back(*p);
        if (A.size() == 3) return false;
        for (int x : *p) {
            A.push_back(x);
            inA[x] = 1;
            if (shape_ok() && search()) return true;
            inA[x] = 0;
            A.pop_back();
        }
        return false;
    }
};

bool forest_is_mt(const Graph& f) { return Hitting(f).search(); }

NoCertificate forest_no(const Graph& t, std::vector<int> w) {
    Graph h = induced_subgraph(t, w).graph;
    const CatalogEntry* e = h.order() <= kCanonicalMaxOrder ? forest_catalog().find_form(canonical_form(h)) : nullptr;
    if (!e) throw std::logic_error("tree route: minimal obstruction missing from the forest catalog: " + write_graph6(h));
    return NoCertificate{e->name, std::move(w), NoKind::Obstruction, "forest"};
}

// The P3s met by a failed branching span a non-MT subforest; delete vertices while it stays non-MT.
std::vector<int> minimize(const Graph& t, const std::vector<std::array<int, 3>>& met) {
    std::vector<int> w;
    for (const auto& p : met) w.insert(w.end(), p.begin(), p.end());
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    for (std::size_t i = 0; i < w.size();) {
        std::vector<int> rest = w;
        rest.erase(rest.begin() + long(i));
        if (!forest_is_mt(induced_subgraph(t, rest).graph))
            w = std::move(rest);
        else
            ++i;
    }
    return w;
}

}  // namespace

RecognitionResult recognize_mt_tree(const Graph& t) {
    if (!is_tree(t)) throw PreconditionError("tree route: input is not a tree");
    int n = t.order();
    RecognitionResult res;
    res.route = "tree";

    auto yes = [&](const std::vector<int>& a) {
        MTPartition p{VertexSet::of(n, a), VertexSet::full(n) - VertexSet::of(n, a)};
        if (Check c = verify_mt_partition(t, p); !c) throw std::logic_error("tree route: " + c.describe());
        res.verdict = Verdict::Yes;
        res.certificate = p;
        return res;
    };
    auto no = [&](std::vector<int> w) {
        res.verdict = Verdict::No;
        res.certificate = forest_no(t, std::move(w));
        return res;
    };

    DiameterInfo d = *diameter_path(t);
    if (d.diameter <= 3) return yes(d.centers);

    if (d.diameter == 4) {
        int v = d.centers[0];
        std::vector<int> heavy;
        for (int u : t.neighbors(v))
            if (t.degree(u) >= 3) heavy.push_back(u);
        if (heavy.size() >= 3) {
            std::vector<int> w;
            for (int i = 0; i < 3; ++i) {
                int h = heavy[i], taken = 0;
                for (int x : t.neighbors(h))
                    if (x != v && taken < 2) {
                        w.push_back(x);
                        if (++taken == 1) w.push_back(h);
                    }
            }
            return no(w);
        }
        heavy.push_back(v);
        return yes(heavy);
    }

    if (d.diameter >= 8) return no(std::vector<int>(d.path.begin(), d.path.begin() + 9));

    Hitting hs(t);
    if (hs.search()) return yes(hs.A);
    return no(minimize(t, hs.met));
}

RecognitionResult recognize_mt_forest(const Graph& f) {
    if (!is_forest(f)) throw PreconditionError("forest route: input has a cycle");
    if (f.order() == 0 || is_connected(f)) {
        if (f.order() == 0) {
            RecognitionResult r;
            r.verdict = Verdict::Yes;
            r.certificate = MTPartition{VertexSet(0), VertexSet(0)};
            r.route = "tree";
            return r;
        }
        return recognize_mt_tree(f);
    }
    return recognize_mt_disconnected(f, [](const Graph& h) { return recognize_mt_tree(h); });
}

}  // namespace mt
