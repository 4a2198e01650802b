#include <algorithm>
#include <map>

#include "mt/catalog.hpp"
#include "mt/recognizers.hpp"
#include "mt/split.hpp"
#include "mt/tc12.hpp"
#include "mt/verify.hpp"

namespace mt {

namespace {

RecognitionResult yes_result(const Graph& g, MTPartition p, const std::string& route) {
    if (Check c = verify_mt_partition(g, p); !c) throw std::logic_error(route + " route: " + c.describe());
    RecognitionResult r;
    r.verdict = Verdict::Yes;
    r.certificate = std::move(p);
    r.route = route;
    return r;
}

MTPartition partition_from_A(int n, const VertexSet& A) { return MTPartition{A, VertexSet::full(n) - A}; }

std::optional<NoCertificate> cite(const ObstructionCatalog& cat, const Graph& g, std::vector<int> w) {
    Graph h = induced_subgraph(g, w).graph;
    if (h.order() > kCanonicalMaxOrder) return std::nullopt;
    const CatalogEntry* e = cat.find_form(canonical_form(h));
    if (!e) return std::nullopt;
    return NoCertificate{e->name, std::move(w), e->promise ? NoKind::PromiseViolation : NoKind::Obstruction,
                         cat.name()};
}

// Moves a result about g[to_host] onto the host graph; vertices outside join B.
RecognitionResult lift(RecognitionResult r, const std::vector<int>& to_host, int n) {
    auto up = [&](const VertexSet& s) {
        VertexSet out(n);
        s.for_each([&](int v) { out.insert(to_host[v]); });
        return out;
    };
    if (auto* p = std::get_if<MTPartition>(&r.certificate)) {
        VertexSet A = up(p->A);
        r.certificate = partition_from_A(n, A);
    } else if (auto* p4 = std::get_if<MTFourPartition>(&r.certificate)) {
        VertexSet A = up(four_part_to_two(*p4).A);
        r.certificate = partition_from_A(n, A);
    } else if (auto* c = std::get_if<NoCertificate>(&r.certificate)) {
        for (int& v : c->witness) v = to_host[v];
    }
    return r;
}

std::vector<int> p3_or_k3(const Graph& g, const VertexSet& comp) {
    std::vector<int> out;
    comp.for_each([&](int v) {
        if (!out.empty() || g.degree(v) < 2) return;
        out = {g.neighbors(v)[0], v, g.neighbors(v)[1]};
    });
    return out;
}

std::optional<NoCertificate> scan_catalog(const ObstructionCatalog& cat, const Graph& g) {
    for (const auto& e : cat.entries())
        if (auto m = find_induced(e.graph, g))
            return NoCertificate{e.name, *m, e.promise ? NoKind::PromiseViolation : NoKind::Obstruction, cat.name()};
    return std::nullopt;
}

}  // namespace

std::optional<NoCertificate> oracle_witness(const Graph& g, GraphClass cls, int cap) {
    if (g.order() > cap || is_member(cls, g, cap)) return std::nullopt;
    std::vector<int> w(g.order());
    for (int v = 0; v < g.order(); ++v) w[v] = v;
    // Heredity makes one pass enough: a vertex kept once stays necessary.
    for (std::size_t i = 0; i < w.size();) {
        std::vector<int> rest = w;
        rest.erase(rest.begin() + long(i));
        if (!is_member(cls, induced_subgraph(g, rest).graph, cap))
            w = std::move(rest);
        else
            ++i;
    }
    std::vector<const ObstructionCatalog*> cats;
    switch (cls) {
        case GraphClass::MT: cats = {&fdisc_catalog(), &fcog_catalog(), &forest_catalog()}; break;
        case GraphClass::TC12: cats = {&f_catalog(), &holes_catalog()}; break;
        case GraphClass::Split: cats = {&split_catalog()}; break;
    }
    for (const auto* cat : cats)
        if (auto c = cite(*cat, g, w); c && c->kind == NoKind::Obstruction) return c;
    return NoCertificate{oracle_witness_id(induced_subgraph(g, w).graph), w, NoKind::Obstruction, "oracle"};
}

RecognitionResult recognize_mt_oracle(const Graph& g, int cap) {
    RecognitionResult r;
    r.route = "oracle";
    if (g.order() > cap) {
        r.note = std::to_string(g.order()) + " vertices exceed the oracle cap " + std::to_string(cap);
        return r;
    }
    if (auto p = mt_bruteforce(g, cap)) return yes_result(g, *p, "oracle");
    r.verdict = Verdict::No;
    r.certificate = *oracle_witness(g, GraphClass::MT, cap);
    return r;
}

// C4-free graphs

RecognitionResult recognize_mt_c4free(const Graph& g, int cap) {
    if (auto c4 = find_C4(g))
        throw PreconditionError("C4-free route: input has an induced C4",
                                NoCertificate{"C4", *c4, NoKind::PromiseViolation, "F"});
    int n = g.order();
    const std::string route = "c4free";
    if (g.max_degree() <= 1) return yes_result(g, partition_from_A(n, VertexSet(n)), route);

    std::vector<VertexSet> N(n);
    for (int v = 0; v < n; ++v) N[v] = g.neighborhood(v);
    VertexSet d4(n), d3(n), d2(n);
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d >= 4) d4.insert(v);
        else if (d == 3) d3.insert(v);
        else if (d == 2) d2.insert(v);
    }

    // Phase 1: |A| = 2. Outside A a degree-4 vertex is impossible, a degree-3 vertex must see
    // both, a degree-2 vertex at least one.
    if (d4.size() <= 2)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                VertexSet ab(n, {a, b});
                if (!(d4 - ab).empty()) continue;
                if (!(d3 - ab).subset_of(N[a] & N[b])) continue;
                if (!(d2 - ab).subset_of(N[a] | N[b])) continue;
                return yes_result(g, partition_from_A(n, ab), route);
            }

    // Phase 2: A holds exactly one non-adjacent pair u, v and then may as well hold all their
    // common neighbours, which form a clique without C4.
    std::vector<int> by_degree(n);
    for (int v = 0; v < n; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](int x, int y) { return g.degree(x) > g.degree(y); });
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            VertexSet A = N[u] & N[v];
            A.insert(u);
            A.insert(v);
            VertexSet B = VertexSet::full(n) - A;
            bool ok = true;
            for (int x : by_degree) {
                if (g.degree(x) < 2) break;
                if (!A.contains(x) && g.count_neighbors_in(x, B) > 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) return yes_result(g, MTPartition{A, B}, route);
        }

    // Phase 3: A a clique.
    TC12Result t = recognize_tc12(g, cap);
    RecognitionResult r;
    r.route = route;
    if (t.yes()) return yes_result(g, MTPartition{t.partition().A, t.partition().B}, route);
    if (!t.no()) {
        r.note = "clique-side search undecided";
        return r;
    }
    r.verdict = Verdict::No;
    if (auto w = oracle_witness(g, GraphClass::MT, cap)) {
        r.certificate = *w;
        r.note = "witness found by oracle search";
    } else {
        r.note = "decision only; no witness above the oracle cap";
    }
    return r;
}

// Disconnected graphs

std::optional<int> is_nice(const Graph& g) {
    int n = g.order();
    if (n == 0 || !is_connected(g)) throw std::invalid_argument("is_nice: input must be connected");
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) cand.push_back(v);
    if (cand.size() > 1) return std::nullopt;
    if (cand.empty()) {
        if (n > 5) return std::nullopt;  // a path or cycle within distance 2 of one vertex
        for (int v = 0; v < n; ++v) cand.push_back(v);
    }
    for (int v : cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (x != v) ok = g.degree(x) - g.adjacent(x, v) <= 1;
        if (ok) return v;
    }
    return std::nullopt;
}

RecognitionResult recognize_mt_disconnected(const Graph& g, const ConnectedSolver& solve) {
    int n = g.order();
    auto comps = connected_components(g);
    if (comps.size() < 2) throw std::invalid_argument("disconnected route: input is connected");
    std::vector<VertexSet> big;
    for (const auto& c : comps)
        if (c.size() >= 3) big.push_back(c);
    const std::string route = "disconnected";
    RecognitionResult r;
    r.route = route;

    auto fdisc_no = [&](std::vector<int> w) {
        auto c = cite(fdisc_catalog(), g, w);
        if (!c) throw std::logic_error("disconnected route: witness not in fdisc");
        r.verdict = Verdict::No;
        r.certificate = *c;
        return r;
    };

    if (big.size() >= 3) {
        std::vector<int> w;
        for (int i = 0; i < 3; ++i) {
            auto t = p3_or_k3(g, big[i]);
            w.insert(w.end(), t.begin(), t.end());
        }
        return fdisc_no(w);
    }
    if (big.size() == 2) {
        std::optional<int> centers[2];
        for (int i = 0; i < 2; ++i) {
            Induced h = induced_subgraph(g, big[i]);
            if (auto c = is_nice(h.graph)) centers[i] = h.to_host[*c];
        }
        if (centers[0] && centers[1])
            return yes_result(g, partition_from_A(n, VertexSet(n, {*centers[0], *centers[1]})), route);
        int bad = centers[0] ? 1 : 0;
        auto t = p3_or_k3(g, big[1 - bad]);
        for (const auto& e : component_catalog().entries())
            if (auto m = find_induced(e.graph, g, big[bad])) {
                m->insert(m->end(), t.begin(), t.end());
                return fdisc_no(*m);
            }
        if (auto c = scan_catalog(fdisc_catalog(), g)) {
            r.verdict = Verdict::No;
            r.certificate = *c;
            return r;
        }
        throw std::logic_error("disconnected route: non-nice component without an fdisc witness");
    }
    if (big.size() == 1) {
        Induced h = induced_subgraph(g, big[0]);
        RecognitionResult sub = lift(solve(h.graph), h.to_host, n);
        sub.route = route + "/" + sub.route;
        return sub;
    }
    return yes_result(g, partition_from_A(n, VertexSet(n)), route);
}

// Twins

TypePartition type_partition(const Graph& g) {
    int n = g.order();
    std::map<std::vector<int>, std::vector<int>> open, closed;
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb(g.neighbors(v).begin(), g.neighbors(v).end());
        open[nb].push_back(v);
        nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
        closed[nb].push_back(v);
    }
    TypePartition tp;
    tp.class_of.assign(n, -1);
    auto add = [&](const std::vector<int>& members, TypeClass::Tag tag) {
        for (int v : members) tp.class_of[v] = int(tp.classes.size());
        tp.classes.push_back({members, tag});
    };
    for (auto& [k, vs] : closed)
        if (vs.size() >= 2) add(vs, TypeClass::TrueTwin);
    for (auto& [k, vs] : open)
        if (vs.size() >= 2) add(vs, TypeClass::FalseTwin);
    for (int v = 0; v < n; ++v)
        if (tp.class_of[v] < 0) add({v}, TypeClass::Neutral);
    std::vector<int> order(tp.classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return tp.classes[a].members[0] < tp.classes[b].members[0]; });
    TypePartition out;
    out.class_of.assign(n, -1);
    for (int i : order) {
        for (int v : tp.classes[i].members) out.class_of[v] = int(out.classes.size());
        out.classes.push_back(std::move(tp.classes[i]));
    }
    return out;
}

// Beyond four members a class behaves the same: A takes at most two of a false-twin class and
// B at most two of a true-twin class, so the other side holds two or more either way.
TwinKernel twin_reduce(const Graph& g, int keep) {
    TwinKernel k;
    k.types = type_partition(g);
    for (const auto& c : k.types.classes)
        for (std::size_t i = 0; i < c.members.size() && int(i) < keep; ++i) k.to_host.push_back(c.members[i]);
    std::sort(k.to_host.begin(), k.to_host.end());
    k.kernel = induced_subgraph(g, k.to_host).graph;
    return k;
}

std::optional<MTPartition> profile_search(const Graph& g, const TypePartition& tp, long long budget, bool* exhausted) {
    int n = g.order();
    int w = int(tp.classes.size());
    if (exhausted) *exhausted = false;
    // Dense classes first: their vertices are the likeliest to sit in A.
    std::vector<int> order(w);
    for (int i = 0; i < w; ++i) order[i] = i;
    auto rep = [&](int c) { return tp.classes[c].members[0]; };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(rep(a)) > g.degree(rep(b)); });

    struct Choice {
        int a, b;
    };
    std::vector<std::vector<Choice>> choices(w);
    for (int t = 0; t < w; ++t) {
        const auto& c = tp.classes[order[t]];
        int s = int(c.members.size());
        if (c.tag == TypeClass::FalseTwin) {
            for (int a = std::min(2, s); a >= 0; --a) choices[t].push_back({a, s - a});
        } else if (c.tag == TypeClass::TrueTwin) {
            for (int b = 0; b <= std::min(2, s); ++b) choices[t].push_back({s - b, b});
        } else {
            choices[t] = {{1, 0}, {0, 1}};
        }
    }
    std::vector<std::vector<char>> adj(w, std::vector<char>(w, 0));
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j)
            if (i != j) adj[i][j] = g.adjacent(rep(order[i]), rep(order[j]));

    std::vector<int> a(w, 0), b(w, 0), missA(w, 0), nbB(w, 0), pick(w, -1);
    long long nodes = 0;
    int t = 0;
    auto apply = [&](int t, int sign) {
        for (int i = 0; i < t; ++i) {
            if (adj[i][t]) {
                nbB[i] += sign * b[t];
                nbB[t] += sign * b[i];
            } else {
                missA[i] += sign * a[t];
                missA[t] += sign * a[i];
            }
        }
    };
    auto feasible = [&](int t) {
        for (int i = 0; i <= t; ++i)
            if ((a[i] > 0 && missA[i] > 1) || (b[i] > 0 && nbB[i] > 1)) return false;
        return true;
    };
    // Iterative backtracking so deep searches do not grow the stack.
    while (t >= 0) {
        if (t == w) break;
        if (pick[t] >= 0) apply(t, -1);
        ++pick[t];
        if (pick[t] >= int(choices[t].size())) {
            pick[t] = -1;
            --t;
            continue;
        }
        if (++nodes > budget) return std::nullopt;
        const auto& c = tp.classes[order[t]];
        a[t] = choices[t][pick[t]].a;
        b[t] = choices[t][pick[t]].b;
        missA[t] = c.tag == TypeClass::FalseTwin && a[t] > 0 ? a[t] - 1 : 0;
        nbB[t] = c.tag == TypeClass::TrueTwin && b[t] > 0 ? b[t] - 1 : 0;
        apply(t, +1);
        if (feasible(t)) ++t;
    }
    if (t < 0) {
        if (exhausted) *exhausted = true;
        return std::nullopt;
    }
    VertexSet A(n);
    for (int i = 0; i < w; ++i)
        for (int k = 0; k < a[i]; ++k) A.insert(tp.classes[order[i]].members[k]);
    return partition_from_A(n, A);
}

RecognitionResult recognize_mt_bounded_nd(const Graph& g, const NdOptions& opt) {
    const std::string route = "nd";
    TwinKernel k = twin_reduce(g);
    std::optional<bool> kernel_mt;
    if (k.kernel.order() <= opt.oracle_cap) kernel_mt = is_member(GraphClass::MT, k.kernel, opt.oracle_cap);
    bool exhausted = false;
    auto p = profile_search(g, k.types, opt.node_budget, &exhausted);
    if ((p && kernel_mt == false) || (exhausted && kernel_mt == true))
        throw std::logic_error("nd route: kernel verdict and profile search disagree");
    if (p) return yes_result(g, *p, route);

    RecognitionResult r;
    r.route = route;
    if (!exhausted && !kernel_mt) {
        r.note = "partition search over budget and twin kernel (" + std::to_string(k.kernel.order()) +
                 " vertices) above the oracle cap";
        return r;
    }
    if (!exhausted && *kernel_mt) {
        r.verdict = Verdict::Yes;
        r.partition_omitted = true;
        r.note = "twin kernel is MT; partition search over budget";
        return r;
    }
    r.verdict = Verdict::No;
    if (auto w = oracle_witness(k.kernel, GraphClass::MT, opt.oracle_cap)) {
        for (int& v : w->witness) v = k.to_host[v];
        r.certificate = *w;
        r.note = "witness found by oracle search on the twin kernel";
    }
    return r;
}

RecognitionResult recognize_mt_cograph(const Graph& g, const NdOptions& opt) {
    if (auto p4 = find_P4(g))
        throw PreconditionError("cograph route: input has an induced P4",
                                NoCertificate{"P4", *p4, NoKind::PromiseViolation, "P4"});
    const std::string route = "cograph";
    bool exhausted = false;
    if (auto p = profile_search(g, type_partition(g), opt.node_budget, &exhausted)) return yes_result(g, *p, route);
    RecognitionResult r;
    r.route = route;
    if (auto w = scan_catalog(fcog_catalog(), g)) {
        r.verdict = Verdict::No;
        r.certificate = *w;
        return r;
    }
    if (exhausted) throw std::logic_error("cograph route: no partition and no fcog witness");
    r.verdict = Verdict::Yes;
    r.partition_omitted = true;
    r.note = "fcog-free; partition search over budget";
    return r;
}

// Dispatch

std::optional<Mode> parse_mode(std::string_view s) {
    for (Mode m : {Mode::Auto, Mode::Oracle, Mode::Tree, Mode::Forest, Mode::C4Free, Mode::Cograph, Mode::Nd,
                   Mode::Split, Mode::TC12})
        if (mode_name(m) == s) return m;
    return std::nullopt;
}

std::string_view mode_name(Mode m) {
    switch (m) {
        case Mode::Auto: return "auto";
        case Mode::Oracle: return "oracle";
        case Mode::Tree: return "tree";
        case Mode::Forest: return "forest";
        case Mode::C4Free: return "c4free";
        case Mode::Cograph: return "cograph";
        case Mode::Nd: return "nd";
        case Mode::Split: return "split";
        case Mode::TC12: return "tc12";
    }
    return "?";
}

GraphClass target_class(Mode m) {
    if (m == Mode::Split) return GraphClass::Split;
    if (m == Mode::TC12) return GraphClass::TC12;
    return GraphClass::MT;
}

namespace {

RecognitionResult recognize_auto(const Graph& g, const RecognizeOptions& opt) {
    NdOptions nd{opt.oracle_cap, opt.node_budget};
    auto connected = [&](const Graph& h) {
        if (is_tree(h)) return recognize_mt_tree(h);
        if (!find_C4(h)) return recognize_mt_c4free(h, opt.oracle_cap);
        if (is_cograph(h)) return recognize_mt_cograph(h, nd);
        return recognize_mt_bounded_nd(h, nd);
    };
    if (g.order() == 0) return yes_result(g, MTPartition{VertexSet(0), VertexSet(0)}, "trivial");
    if (!is_connected(g)) return recognize_mt_disconnected(g, connected);
    return connected(g);
}

}  // namespace

RecognitionResult recognize(const Graph& g, Mode mode, const RecognizeOptions& opt) {
    NdOptions nd{opt.oracle_cap, opt.node_budget};
    switch (mode) {
        case Mode::Auto: return recognize_auto(g, opt);
        case Mode::Oracle: return recognize_mt_oracle(g, opt.oracle_cap);
        case Mode::Tree: return recognize_mt_tree(g);
        case Mode::Forest: return recognize_mt_forest(g);
        case Mode::C4Free: return recognize_mt_c4free(g, opt.oracle_cap);
        case Mode::Cograph: return recognize_mt_cograph(g, nd);
        case Mode::Nd: return recognize_mt_bounded_nd(g, nd);
        case Mode::Split: return to_recognition_result(recognize_split(g));
        case Mode::TC12: return to_recognition_result(recognize_tc12(g, opt.oracle_cap));
    }
    throw std::invalid_argument("unknown mode");
}

}  // namespace mt
