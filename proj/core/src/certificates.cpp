#include "mt/certificates.hpp"

#include <sstream>

namespace mt {

std::string_view class_name(GraphClass c) {
    switch (c) {
        case GraphClass::MT: return "mt";
        case GraphClass::TC12: return "tc12";
        case GraphClass::Split: return "split";
    }
    return "?";
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Undecided: return "undecided";
    }
    return "?";
}

std::string Check::describe() const {
    if (ok) return "accept";
    std::ostringstream os;
    os << "reject(" << clause;
    if (!vertices.empty()) {
        os << ":";
        for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : " ") << vertices[i];
    }
    os << ")";
    if (!detail.empty()) os << " " << detail;
    return os.str();
}

namespace {

Check check_partition(const Graph& g, std::initializer_list<const VertexSet*> parts) {
    int n = g.order();
    std::vector<int> seen(n, 0);
    for (const VertexSet* p : parts) {
        int bad = -1;
        p->for_each([&](int v) {
            if (v >= n) {
                if (bad < 0) bad = v;
                return;
            }
            seen[v]++;
        });
        if (bad >= 0) return Check::reject("structural", {bad}, "vertex outside the graph");
    }
    for (int v = 0; v < n; ++v) {
        if (seen[v] == 0) return Check::reject("structural", {v}, "vertex in no part");
        if (seen[v] > 1) return Check::reject("structural", {v}, "vertex in several parts");
    }
    return Check::accept();
}

// Each vertex of s misses at most `slack` other vertices of s.
Check near_clique(const Graph& g, const VertexSet& s, int slack, const char* clause) {
    int size = s.size();
    Check out;
    s.for_each([&](int v) {
        if (!out.ok) return;
        int miss = size - 1 - g.count_neighbors_in(v, s);
        if (miss > slack) {
            std::vector<int> vs{v};
            s.for_each([&](int u) {
                if (u != v && !g.adjacent(u, v) && vs.size() < 3) vs.push_back(u);
            });
            out = Check::reject(clause, vs);
        }
    });
    return out;
}

Check sparse(const Graph& g, const VertexSet& s, int max_deg, const char* clause) {
    Check out;
    s.for_each([&](int v) {
        if (!out.ok) return;
        if (g.count_neighbors_in(v, s) > max_deg) {
            std::vector<int> vs{v};
            for (int u : g.neighbors(v))
                if (s.contains(u) && int(vs.size()) < max_deg + 2) vs.push_back(u);
            out = Check::reject(clause, vs);
        }
    });
    return out;
}

}  // namespace

Check verify_mt_partition(const Graph& g, const MTPartition& p) {
    if (auto c = check_partition(g, {&p.A, &p.B}); !c) return c;
    if (auto c = near_clique(g, p.A, 1, "A-min-degree"); !c) return c;
    return sparse(g, p.B, 1, "B-max-degree");
}

Check verify_mt_four_partition(const Graph& g, const MTFourPartition& p) {
    if (auto c = check_partition(g, {&p.K, &p.Mbar, &p.S, &p.M}); !c) return c;
    if (auto c = sparse(g, p.S, 0, "S-independent"); !c) return c;
    Check out;
    p.M.for_each([&](int v) {
        if (out.ok && g.count_neighbors_in(v, p.M) != 1) out = Check::reject("M-perfect-matching", {v});
    });
    if (!out) return out;
    int mb = p.Mbar.size();
    p.Mbar.for_each([&](int v) {
        if (out.ok && mb - 1 - g.count_neighbors_in(v, p.Mbar) != 1) out = Check::reject("Mbar-antimatching", {v});
    });
    if (!out) return out;
    if (auto c = near_clique(g, p.K, 0, "K-clique"); !c) return c;
    p.S.for_each([&](int v) {
        if (!out.ok) return;
        for (int u : g.neighbors(v))
            if (p.M.contains(u)) {
                out = Check::reject("S-M-anticomplete", {v, u});
                return;
            }
    });
    if (!out) return out;
    int mbar_size = p.Mbar.size();
    p.K.for_each([&](int v) {
        if (out.ok && g.count_neighbors_in(v, p.Mbar) != mbar_size) {
            std::vector<int> vs{v};
            p.Mbar.for_each([&](int u) {
                if (vs.size() < 2 && !g.adjacent(u, v)) vs.push_back(u);
            });
            out = Check::reject("K-Mbar-complete", vs);
        }
    });
    return out;
}

MTFourPartition two_part_to_four(const Graph& g, const MTPartition& p) {
    if (auto c = verify_mt_partition(g, p); !c)
        throw std::invalid_argument("two_part_to_four: partition does not verify: " + c.describe());
    int n = g.order(), a = p.A.size();
    MTFourPartition f{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
    p.A.for_each([&](int v) { (g.count_neighbors_in(v, p.A) == a - 1 ? f.K : f.Mbar).insert(v); });
    p.B.for_each([&](int v) { (g.count_neighbors_in(v, p.B) == 0 ? f.S : f.M).insert(v); });
    return f;
}

MTPartition four_part_to_two(const MTFourPartition& p) { return {p.K | p.Mbar, p.S | p.M}; }

Check verify_tc12_partition(const Graph& g, const TC12Partition& p) {
    if (auto c = check_partition(g, {&p.A, &p.B}); !c) return c;
    if (auto c = near_clique(g, p.A, 0, "A-clique"); !c) return c;
    return sparse(g, p.B, 1, "B-max-degree");
}

Check verify_split_partition(const Graph& g, const SplitPartition& p) {
    if (auto c = check_partition(g, {&p.K, &p.S}); !c) return c;
    if (auto c = near_clique(g, p.K, 0, "K-clique"); !c) return c;
    return sparse(g, p.S, 0, "S-independent");
}

void ObstructionCatalog::add(std::string name, Graph g, std::string note, bool promise) {
    if (find(name)) throw CatalogError(name_ + ": duplicate name " + name);
    CanonicalForm f = canonical_form(g);
    if (auto* e = find_form(f)) throw CatalogError(name_ + ": " + name + " is isomorphic to " + e->name);
    entries_.push_back({std::move(name), std::move(g), std::move(f), std::move(note), promise});
}

const CatalogEntry* ObstructionCatalog::find(std::string_view name) const {
    for (auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

const CatalogEntry* ObstructionCatalog::find_form(const CanonicalForm& f) const {
    for (auto& e : entries_)
        if (e.form == f) return &e;
    return nullptr;
}

Check verify_no_certificate(const Graph& g, const NoCertificate& c, const ObstructionCatalog& catalog) {
    const CatalogEntry* e = catalog.find(c.obstruction_id);
    if (!e) return Check::reject("unknown-obstruction", {}, c.obstruction_id + " not in catalog " + catalog.name());
    if (int(c.witness.size()) != e->graph.order())
        return Check::reject("witness-size", c.witness,
                             "expected " + std::to_string(e->graph.order()) + " vertices");
    Induced h;
    try {
        h = induced_subgraph(g, c.witness);
    } catch (const std::exception& ex) {
        return Check::reject("witness-range", c.witness, ex.what());
    }
    CanonicalForm f = canonical_form(h.graph);
    if (f != e->form) return Check::reject("witness-not-isomorphic", c.witness, "induced " + f + " vs " + e->form);
    bool promise = c.kind == NoKind::PromiseViolation;
    if (promise != e->promise)
        return Check::reject("kind-mismatch", {}, c.obstruction_id + (e->promise ? " is" : " is not") +
                                                      " a promise-violation entry");
    return Check::accept();
}

}  // namespace mt
