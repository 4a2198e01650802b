#include "mt/tc12.hpp"

#include <algorithm>
#include <stdexcept>

#include "mt/catalog.hpp"
#include "mt/oracle.hpp"
#include "mt/split.hpp"

namespace mt {

namespace {

using Fam = uint32_t;  // a set of part indices X

constexpr int bit(int t) { return 1 << t; }
constexpr Fam one(int mask) { return Fam(1) << mask; }

NoCertificate make_no(const CatalogEntry& e, std::vector<int> w, const std::string& catalog) {
    return NoCertificate{e.name, std::move(w), e.promise ? NoKind::PromiseViolation : NoKind::Obstruction, catalog};
}

// Search F (C4 last, since it only refutes the promise) and then C7 inside `within`.
std::optional<NoCertificate> witness_within(const Graph& g, const VertexSet& within) {
    const auto& F = f_catalog();
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& e : F.entries()) {
            if (e.promise != (pass == 1)) continue;
            if (pass == 1) {
                if (auto m = find_induced(holes_catalog().entries()[0].graph, g, within))
                    return make_no(holes_catalog().entries()[0], *m, "holes");
            }
            if (auto m = find_induced(e.graph, g, within)) return make_no(e, *m, "F");
        }
    return std::nullopt;
}

std::optional<NoCertificate> witness_among(const Graph& g, const std::vector<int>& vs) {
    VertexSet s(g.order());
    for (int v : vs) s.insert(v);
    return witness_within(g, s);
}

// Shared machinery over one set of exact neighbourhoods.
struct Ctx {
    const Graph& g;
    const ExactNeighborhoods& nb;
    int* inconclusive;

    bool in(int v, Fam f) const {
        int c = nb.code[v];
        return c >= 0 && ((f >> c) & 1);
    }
    bool empty(Fam f) const {
        for (int x = 0; x < 16; ++x)
            if (((f >> x) & 1) && !nb.parts[x].empty()) return false;
        return true;
    }
    int count(Fam f) const {
        int c = 0;
        for (int x = 0; x < 16; ++x)
            if ((f >> x) & 1) c += int(nb.parts[x].size());
        return c;
    }
    std::vector<int> members(Fam f) const {
        std::vector<int> out;
        for (int x = 0; x < 16; ++x)
            if ((f >> x) & 1) out.insert(out.end(), nb.parts[x].begin(), nb.parts[x].end());
        return out;
    }
    int first(Fam f) const {
        for (int x = 0; x < 16; ++x)
            if (((f >> x) & 1) && !nb.parts[x].empty()) return nb.parts[x][0];
        return -1;
    }

    std::optional<std::pair<int, int>> non_adjacent_pair(Fam f, int skip = -1) const {
        auto ms = members(f);
        int size = int(ms.size()) - (skip >= 0 && in(skip, f) ? 1 : 0);
        for (int v : ms) {
            if (v == skip) continue;
            int c = 0;
            for (int u : g.neighbors(v)) c += u != skip && in(u, f);
            if (c == size - 1) continue;
            for (int u : ms)
                if (u != v && u != skip && !g.adjacent(u, v)) return std::make_pair(v, u);
        }
        return std::nullopt;
    }
    std::optional<std::pair<int, int>> edge_between(Fam a, Fam b) const {
        for (int v : members(a))
            for (int u : g.neighbors(v))
                if (in(u, b)) return std::make_pair(v, u);
        return std::nullopt;
    }
    std::optional<std::pair<int, int>> non_edge_between(Fam a, Fam b) const {
        int size = count(b);
        for (int v : members(a)) {
            int c = 0;
            for (int u : g.neighbors(v)) c += in(u, b);
            if (c == size) continue;
            for (int u : members(b))
                if (!g.adjacent(u, v)) return std::make_pair(v, u);
        }
        return std::nullopt;
    }
    // Three vertices of f inducing P3 or K3.
    std::optional<std::array<int, 3>> connected_triple(Fam f) const {
        for (int v : members(f)) {
            int a = -1;
            for (int u : g.neighbors(v))
                if (in(u, f)) {
                    if (a < 0) a = u;
                    else return std::array<int, 3>{a, v, u};
                }
        }
        return std::nullopt;
    }

    // A witness among the anchors and the offending vertices, widening to a few
    // vertices of every part and then to the whole graph.
    std::optional<NoCertificate> fail(std::vector<int> ev) const {
        ev.insert(ev.end(), nb.anchors.begin(), nb.anchors.end());
        if (auto w = witness_among(g, ev)) return w;
        for (const auto& p : nb.parts)
            for (std::size_t t = 0; t < p.size() && t < 2; ++t) ev.push_back(p[t]);
        if (auto w = witness_among(g, ev)) return w;
        if (inconclusive) ++*inconclusive;
        return witness_within(g, VertexSet::full(g.order()));
    }
};

struct Roles {
    int i, j, k, l;  // anchor positions; {i,j} and {k,l} are the two edges
    int m(std::initializer_list<int> pos) const {
        int x = 0;
        for (int p : pos) x |= bit(p);
        return x;
    }
};

std::vector<Roles> role_assignments() {
    std::vector<Roles> out;
    for (int swap = 0; swap < 2; ++swap) {
        int p0 = swap ? 2 : 0, q0 = swap ? 0 : 2;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) out.push_back({p0 + a, p0 + 1 - a, q0 + b, q0 + 1 - b});
    }
    return out;
}

std::optional<NoCertificate> audits(const Ctx& c) {
    auto roles = role_assignments();
    std::vector<int> ev;
    auto fail = [&](std::vector<int> vs) { return c.fail(std::move(vs)); };

    for (const Roles& r : roles) {
        int i = r.i, j = r.j, k = r.k, l = r.l;
        // Emptiness rules.
        if (!c.empty(one(r.m({i, k}))))
            for (int t : {r.m({i, l}), r.m({j, k}), r.m({j, l}), r.m({i, j, l}), r.m({j, k, l})})
                if (!c.empty(one(t))) {
                    if (auto w = fail({c.first(one(r.m({i, k}))), c.first(one(t))})) return w;
                }
        if (!c.empty(one(r.m({i, j, k}))))
            for (int t : {r.m({i, l}), r.m({i, j, l}), r.m({j, l})})
                if (!c.empty(one(t))) {
                    if (auto w = fail({c.first(one(r.m({i, j, k}))), c.first(one(t))})) return w;
                }
        // Mixed clique.
        Fam mixed = one(r.m({i, k})) | one(r.m({i, j, k})) | one(r.m({i, k, l})) | one(r.m({i, j, k, l}));
        if (auto p = c.non_adjacent_pair(mixed))
            if (auto w = fail({p->first, p->second})) return w;
    }

    for (const Roles& r : roles) {
        int i = r.i, j = r.j, k = r.k, l = r.l;
        Fam L = one(bit(i)) | one(bit(j)) | one(r.m({i, j}));
        Fam R = one(bit(k)) | one(bit(l)) | one(r.m({k, l}));
        // Side completeness and the rules around it.
        if (auto p = c.non_edge_between(L, R))
            if (auto w = fail({p->first, p->second})) return w;
        if (auto p = c.edge_between(one(bit(i)), one(bit(j))))
            if (auto w = fail({p->first, p->second})) return w;
        if (!c.empty(L) && !c.empty(one(bit(k))) && !c.empty(one(bit(l))))
            if (auto w = fail({c.first(L), c.first(one(bit(k))), c.first(one(bit(l)))})) return w;
        if (!c.empty(L) && !c.empty(R))
            if (auto p = c.non_adjacent_pair(L | R))
                if (auto w = fail({p->first, p->second, c.first(L), c.first(R)})) return w;
        if (c.count(one(bit(j))) >= 2)
            if (auto t = c.connected_triple(one(bit(i)))) {
                auto nj = c.members(one(bit(j)));
                if (auto w = fail({(*t)[0], (*t)[1], (*t)[2], nj[0], nj[1]})) return w;
            }
        // Cross clique: a part meeting both edges is complete to both sides.
        if (!c.empty(L) && !c.empty(R))
            for (int X = 1; X < 16; ++X) {
                if (!(X & (bit(i) | bit(j))) || !(X & (bit(k) | bit(l))) || c.empty(one(X))) continue;
                if (auto p = c.non_edge_between(one(X), L | R)) {
                    std::vector<int> vs{p->first, p->second};
                    for (int x : {bit(i), bit(j), r.m({i, j}), bit(k), bit(l), r.m({k, l})})
                        if (!c.empty(one(x))) vs.push_back(c.first(one(x)));
                    if (auto w = fail(vs)) return w;
                }
            }
        // Interaction of N_ik, N_ikl with N_j and N_ij.
        Fam ikx = one(r.m({i, k})) | one(r.m({i, k, l}));
        Fam nj = one(bit(j));
        if (auto p = c.edge_between(ikx, nj))
            if (auto w = fail({p->first, p->second})) return w;
        if (c.empty(ikx)) continue;
        int x = c.first(ikx);
        auto js = c.members(nj);
        if (js.size() >= 2)
            if (auto w = fail({x, js[0], js[1]})) return w;
        // j-v-u is a P3 beside the triangle x-k-l, or closes the 5-cycle i-x-u-v-j.
        if (auto p = c.edge_between(nj, one(0)))
            if (auto w = fail({x, p->first, p->second})) return w;
        Fam Q = ikx | one(r.m({i, j})) | one(r.m({i, j, k})) | one(r.m({i, j, l})) | one(r.m({i, j, k, l}));
        auto p = c.non_adjacent_pair(Q);
        if (!p) continue;
        if (!js.empty()) {
            if (auto w = fail({p->first, p->second, x, js[0]})) return w;
            continue;
        }
        std::vector<int> vs{p->first, p->second, x};
        bool rescued = false;
        for (int z : {p->first, p->second}) {
            if (c.nb.code[z] != r.m({i, j})) continue;
            auto q = c.non_adjacent_pair(Q, z);
            if (!q) {
                rescued = true;
                break;
            }
            vs.push_back(q->first);
            vs.push_back(q->second);
        }
        if (!rescued)
            if (auto w = fail(vs)) return w;
    }
    return std::nullopt;
}

// Every vertex outside `placed` parts must be absent; otherwise cite it with `with`.
std::optional<std::variant<NoCertificate, std::monostate>> require_placed(const Ctx& c, Fam placed, int with) {
    for (int X = 0; X < 16; ++X) {
        if ((placed >> X) & 1 || c.nb.parts[X].empty()) continue;
        std::vector<int> ev{c.nb.parts[X][0]};
        if (with >= 0) ev.push_back(with);
        if (auto w = c.fail(ev)) return std::variant<NoCertificate, std::monostate>(*w);
        return std::variant<NoCertificate, std::monostate>(std::monostate{});
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> clique_violation(const Graph& g, const VertexSet& A) {
    auto ms = A.members();
    for (int v : ms) {
        if (g.count_neighbors_in(v, A) == int(ms.size()) - 1) continue;
        for (int u : ms)
            if (u != v && !g.adjacent(u, v)) return std::make_pair(v, u);
    }
    return std::nullopt;
}

std::optional<int> degree_violation(const Graph& g, const VertexSet& B) {
    std::optional<int> bad;
    B.for_each([&](int v) {
        if (!bad && g.count_neighbors_in(v, B) > 1) bad = v;
    });
    return bad;
}

std::variant<BasePartition, NoCertificate, std::monostate> base_impl(const Ctx& c) {
    using Out = std::variant<BasePartition, NoCertificate, std::monostate>;
    const Graph& g = c.g;
    const auto& an = c.nb.anchors;
    int n = g.order();
    BasePartition bp{TC12Partition{VertexSet(n), VertexSet(n)}, VertexSet(n), MergeMode::Rec1};
    VertexSet& A = bp.partition.A;
    VertexSet& B = bp.partition.B;
    auto add = [&](VertexSet& s, Fam f) {
        for (int v : c.members(f)) s.insert(v);
    };
    auto unplaced = [&](Fam placed, int with) -> std::optional<Out> {
        if (auto r = require_placed(c, placed, with)) {
            if (auto* w = std::get_if<NoCertificate>(&*r)) return Out(*w);
            return Out(std::monostate{});
        }
        return std::nullopt;
    };

    Fam L = one(1) | one(2) | one(3);
    Fam R = one(4) | one(8) | one(12);
    if (c.empty(L) == c.empty(R)) {
        add(A, Fam(0xFFFE));
        for (int a : an) B.insert(a);
        add(bp.recursion, one(0));
    } else {
        Roles side = c.empty(L) ? Roles{2, 3, 0, 1} : Roles{0, 1, 2, 3};
        std::optional<Roles> pick;
        for (int a = 0; a < 2 && !pick; ++a)
            for (int b = 0; b < 2 && !pick; ++b) {
                Roles r{a ? side.j : side.i, a ? side.i : side.j, b ? side.l : side.k, b ? side.k : side.l};
                if (!c.empty(one(r.m({r.i, r.k})) | one(r.m({r.i, r.k, r.l})))) pick = r;
            }
        if (pick) {
            Roles r = *pick;
            int i = r.i, j = r.j, k = r.k, l = r.l;
            bp.mode = MergeMode::Rec2;
            Fam inA = one(r.m({i, j})) | one(r.m({i, k})) | one(r.m({i, l})) | one(r.m({i, j, k})) |
                      one(r.m({i, j, l})) | one(r.m({i, k, l})) | one(r.m({i, j, k, l}));
            int x = c.first(one(r.m({i, k})) | one(r.m({i, k, l})));
            if (auto u = unplaced(inA | one(bit(j)) | one(0) | one(bit(i)), x)) return *u;
            add(A, inA);
            A.insert(an[i]);
            for (int t : {j, k, l}) B.insert(an[t]);
            if (!c.empty(one(bit(j)))) {
                add(B, one(bit(j)));
            } else if (auto p = clique_violation(g, A)) {
                for (int z : {p->first, p->second}) {
                    if (c.nb.code[z] != r.m({i, j})) continue;
                    VertexSet A2 = A;
                    A2.erase(z);
                    if (!clique_violation(g, A2)) {
                        A = A2;
                        B.insert(z);
                        break;
                    }
                }
            }
            add(bp.recursion, one(0) | one(bit(i)));
        } else {
            int i = side.i, j = side.j;
            int k = c.empty(one(bit(i) | bit(j) | bit(side.l))) ? side.k : side.l;
            int l = k == side.k ? side.l : side.k;
            bp.mode = MergeMode::Rec3;
            Fam inA = one(bit(i) | bit(j) | bit(k)) | one(15);
            Fam rec = one(0) | one(bit(i)) | one(bit(j)) | one(bit(i) | bit(j));
            if (auto u = unplaced(inA | rec, c.first(inA))) return *u;
            add(A, inA);
            A.insert(an[i]);
            A.insert(an[j]);
            B.insert(an[k]);
            B.insert(an[l]);
            add(bp.recursion, rec);
        }
    }
    if (auto p = clique_violation(g, A)) {
        if (auto w = c.fail({p->first, p->second})) return *w;
        return std::monostate{};
    }
    if (auto v = degree_violation(g, B)) {
        std::vector<int> ev{*v};
        for (int u : g.neighbors(*v))
            if (B.contains(u)) ev.push_back(u);
        if (auto w = c.fail(ev)) return *w;
        return std::monostate{};
    }
    return bp;
}

}  // namespace

const std::vector<int>& ExactNeighborhoods::N(std::initializer_list<int> labels) const {
    int x = 0;
    for (int t : labels) {
        if (t < 1 || t > 4) throw std::out_of_range("anchor labels are 1..4");
        x |= bit(t - 1);
    }
    return parts[x];
}

ExactNeighborhoods exact_neighborhoods(const Graph& g, const std::array<int, 4>& a) {
    for (int t = 0; t < 4; ++t) {
        if (a[t] < 0 || a[t] >= g.order()) throw std::invalid_argument("anchor out of range");
        for (int s = 0; s < t; ++s)
            if (a[s] == a[t]) throw std::invalid_argument("anchors must be distinct");
    }
    if (!g.adjacent(a[0], a[1]) || !g.adjacent(a[2], a[3]) || g.adjacent(a[0], a[2]) || g.adjacent(a[0], a[3]) ||
        g.adjacent(a[1], a[2]) || g.adjacent(a[1], a[3]))
        throw std::invalid_argument("anchors do not induce 2K2 with edges 12 and 34");
    ExactNeighborhoods nb;
    nb.anchors = a;
    nb.code.assign(g.order(), 0);
    for (int t = 0; t < 4; ++t) nb.code[a[t]] = -1;
    for (int t = 0; t < 4; ++t)
        for (int u : g.neighbors(a[t]))
            if (nb.code[u] >= 0) nb.code[u] |= bit(t);
    for (int v = 0; v < g.order(); ++v)
        if (nb.code[v] >= 0) nb.parts[nb.code[v]].push_back(v);
    return nb;
}

std::optional<std::vector<int>> check_clique_comparability(const Graph& g, const VertexSet& C, int x, int y) {
    if (!g.adjacent(x, y) || C.contains(x) || C.contains(y))
        throw std::invalid_argument("x and y must be adjacent and outside C");
    int v = -1, w = -1;
    C.for_each([&](int c) {
        bool ax = g.adjacent(c, x), ay = g.adjacent(c, y);
        if (ax && !ay && v < 0) v = c;
        if (ay && !ax && w < 0) w = c;
    });
    if (v < 0 || w < 0) return std::nullopt;
    return std::vector<int>{v, w, y, x};
}

std::variant<int, NoCertificate> complete_vertex_over_clique(const Graph& g, const VertexSet& C,
                                                             const std::array<int, 3>& xyz) {
    int edges = 0;
    for (int a = 0; a < 3; ++a) {
        if (C.contains(xyz[a])) throw std::invalid_argument("x, y, z must lie outside C");
        for (int b = a + 1; b < 3; ++b) edges += g.adjacent(xyz[a], xyz[b]);
    }
    if (edges < 2) throw std::invalid_argument("x, y, z must induce P3 or K3");
    bool covered = true;
    C.for_each([&](int c) { covered = covered && (g.adjacent(c, xyz[0]) || g.adjacent(c, xyz[1]) || g.adjacent(c, xyz[2])); });
    if (!covered) throw std::invalid_argument("C must be dominated by x, y, z");
    for (int t : xyz) {
        bool complete = true;
        C.for_each([&](int c) { complete = complete && g.adjacent(c, t); });
        if (complete) return t;
    }
    const auto& F = f_catalog();
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (g.adjacent(xyz[a], xyz[b]))
                if (auto w = check_clique_comparability(g, C, xyz[a], xyz[b])) return make_no(*F.find("C4"), *w, "F");
    // A path whose middle trace lies below both ends with the ends incomparable.
    int mid = 0;
    while (g.adjacent(xyz[mid], xyz[(mid + 1) % 3]) + g.adjacent(xyz[mid], xyz[(mid + 2) % 3]) < 2) ++mid;
    int x = xyz[(mid + 1) % 3], y = xyz[mid], z = xyz[(mid + 2) % 3];
    int v = -1, w = -1;
    C.for_each([&](int c) {
        bool ax = g.adjacent(c, x), az = g.adjacent(c, z);
        if (ax && !az && v < 0) v = c;
        if (az && !ax && w < 0) w = c;
    });
    std::vector<int> cyc{x, v, w, z, y};
    Graph c5 = cycle_graph(5);
    if (v >= 0 && w >= 0 && isomorphic(induced_subgraph(g, cyc).graph, c5))
        return make_no(*F.find("C5"), cyc, "F");
    throw std::logic_error("complete_vertex_over_clique: no complete vertex and no cycle");
}

std::optional<NoCertificate> lemma_audits(const Graph& g, const ExactNeighborhoods& nb) {
    Ctx c{g, nb, nullptr};
    return audits(c);
}

std::variant<BasePartition, NoCertificate, std::monostate> base_partition(const Graph& g,
                                                                          const ExactNeighborhoods& nb) {
    Ctx c{g, nb, nullptr};
    return base_impl(c);
}

namespace {

// On failure `ev` receives the vertices that broke the swap.
std::optional<TC12Partition> merge_impl(const Graph& g, const TC12Partition& outer, const TC12Partition& inner,
                                        std::vector<int>& ev) {
    const VertexSet &A = outer.A, &B = outer.B, &A1 = inner.A, &B1 = inner.B;
    int a_size = A.size();
    std::vector<int> D;
    A1.for_each([&](int u) {
        if (g.count_neighbors_in(u, A) < a_size) D.push_back(u);
    });
    auto missed = [&](int u) {
        int w = -1;
        A.for_each([&](int a) {
            if (w < 0 && !g.adjacent(a, u)) w = a;
        });
        return w;
    };
    auto done = [&]() -> std::optional<TC12Partition> {
        std::sort(ev.begin(), ev.end());
        ev.erase(std::unique(ev.begin(), ev.end()), ev.end());
        ev.erase(std::remove(ev.begin(), ev.end(), -1), ev.end());
        return std::nullopt;
    };
    VertexSet C1(g.order()), Dset(g.order());
    for (int u : D) {
        Dset.insert(u);
        for (int x : g.neighbors(u))
            if (B1.contains(x)) C1.insert(x);
    }
    // Lift only the neighbours that would end up with two partners in B, then the whole of C1.
    VertexSet lift(g.order());
    C1.for_each([&](int x) {
        int d = 0;
        for (int y : g.neighbors(x)) d += B1.contains(y) || Dset.contains(y) || B.contains(y);
        if (d > 1) lift.insert(x);
    });
    for (int u : D) {
        int d = 0;
        for (int y : g.neighbors(u)) d += (B1.contains(y) && !lift.contains(y)) || Dset.contains(y) || B.contains(y);
        if (d > 1)
            for (int y : g.neighbors(u))
                if (C1.contains(y)) lift.insert(y);
    }
    std::optional<std::pair<int, int>> p;
    std::optional<int> d;
    TC12Partition out;
    auto lifted = [&](const VertexSet& S) {
        return TC12Partition{A | (A1 - Dset) | S, B | (B1 - S) | Dset};
    };
    std::vector<TC12Partition> starts{TC12Partition{A | A1, B | B1}};
    if (D.size() <= 2) {
        starts.push_back(lifted(lift));
        starts.push_back(lifted(C1));
    }
    int budget = A.size() + A1.size() + B1.size() + 2;
    for (const auto& start : starts) {
        out = start;
        for (int round = 0; round < budget; ++round) {
            d = degree_violation(g, out.B);
            if (d) {
                // Relieve an overloaded B vertex by lifting an inner vertex complete to A.
                int a_now = out.A.size(), pick = -1;
                std::vector<int> around{*d};
                for (int y : g.neighbors(*d))
                    if (out.B.contains(y)) around.push_back(y);
                for (int y : around)
                    if (pick < 0 && (A1.contains(y) || B1.contains(y)) && g.count_neighbors_in(y, out.A) == a_now)
                        pick = y;
                if (pick < 0) break;
                out.B.erase(pick);
                out.A.insert(pick);
                continue;
            }
            p = clique_violation(g, out.A);
            if (!p) return out;
            // Drop one end of a missing edge into B when B can take it.
            int pick = -1, worst = -1;
            for (int x : {p->first, p->second}) {
                int partners = 0, busy = 0;
                for (int y : g.neighbors(x))
                    if (out.B.contains(y)) {
                        ++partners;
                        busy += g.count_neighbors_in(y, out.B) > 0;
                    }
                int misses = out.A.size() - 1 - g.count_neighbors_in(x, out.A);
                if (partners <= 1 && busy == 0 && misses > worst) pick = x, worst = misses;
            }
            if (pick < 0) break;
            out.A.erase(pick);
            out.B.insert(pick);
        }
    }
    p = clique_violation(g, out.A);
    d = degree_violation(g, out.B);
    VertexSet A2 = (A1 - Dset) | C1;
    D.resize(std::min<std::size_t>(D.size(), 3));
    ev.assign(D.begin(), D.end());
    for (int u : D) ev.push_back(missed(u));
    if (p) {
        ev.push_back(p->first);
        ev.push_back(p->second);
        for (int u : {p->first, p->second})
            if (int w = missed(u); w >= 0 && A2.contains(u)) ev.push_back(w);
    }
    if (d) {
        ev.push_back(*d);
        for (int u : g.neighbors(*d))
            if (out.B.contains(u)) ev.push_back(u);
    }
    return done();
}

}  // namespace

std::variant<TC12Partition, NoCertificate, std::monostate> merge_partitions(const Graph& g,
                                                                            const TC12Partition& outer,
                                                                            const TC12Partition& inner,
                                                                            MergeMode) {
    std::vector<int> ev;
    if (auto p = merge_impl(g, outer, inner, ev)) return *p;
    if (auto w = witness_among(g, ev)) return *w;
    return std::monostate{};
}

namespace {

struct Frame {
    std::vector<int> vertices;  // host ids, including B0
    VertexSet B0;
    TC12Partition outer;
    std::vector<int> sample;  // anchors, then up to two vertices of every part
};

VertexSet to_host(const VertexSet& s, const std::vector<int>& map, int n) {
    VertexSet out(n);
    s.for_each([&](int v) { out.insert(map[v]); });
    return out;
}

NoCertificate to_host(NoCertificate w, const std::vector<int>& map) {
    for (int& v : w.witness) v = map[v];
    return w;
}

}  // namespace

TC12Result recognize_tc12(const Graph& g, int oracle_cap) {
    int n = g.order();
    TC12Result res;
    std::vector<Frame> frames;
    std::vector<int> cur(n);
    for (int v = 0; v < n; ++v) cur[v] = v;
    TC12Partition inner{VertexSet(n), VertexSet(n)};
    int inconclusive = 0;

    // Handles a round whose construction failed: look for a witness, else ask the oracle.
    // A round whose construction failed. Any valid A extends to a maximal clique Q with
    // G - Q of degree at most 1, and C4-free graphs have O(n^2) maximal cliques.
    auto rescue = [&](const std::vector<int>& vs) -> std::optional<TC12Partition> {
        ++res.fallbacks;
        Induced h = induced_subgraph(g, vs);
        int k = h.graph.order();
        std::optional<VertexSet> found;
        bool complete = for_each_maximal_clique(
            h.graph,
            [&](const VertexSet& Q) {
                bool ok = true;
                for (int v = 0; v < k && ok; ++v)
                    if (!Q.contains(v)) ok = h.graph.degree(v) - h.graph.count_neighbors_in(v, Q) <= 1;
                if (ok) found = Q;
                return !ok;
            },
            4LL * k * k + 64);
        if (found) return TC12Partition{to_host(*found, h.to_host, n), to_host(VertexSet::full(k) - *found, h.to_host, n)};
        if (!complete && k <= oracle_cap) {
            if (auto p = tc12_bruteforce(h.graph, oracle_cap))
                return TC12Partition{to_host(p->A, h.to_host, n), to_host(p->B, h.to_host, n)};
            complete = true;
        }
        if (auto w = witness_within(g, VertexSet::of(n, vs))) {
            res.outcome = *w;
            return std::nullopt;
        }
        res.note = complete ? "no (1,2)-tc partition and no catalog witness" : "too many maximal cliques to settle";
        res.outcome = std::monostate{};
        return std::nullopt;
    };

    while (!cur.empty()) {
        ++res.depth;
        Induced h = induced_subgraph(g, cur);
        Frame f{cur, VertexSet(n), TC12Partition{VertexSet(n), VertexSet(n)}, {}};
        std::vector<int> core;
        for (const auto& comp : connected_components(h.graph)) {
            if (comp.size() <= 2) comp.for_each([&](int v) { f.B0.insert(h.to_host[v]); });
            else comp.for_each([&](int v) { core.push_back(h.to_host[v]); });
        }
        std::sort(core.begin(), core.end());
        if (core.empty()) {
            inner = TC12Partition{VertexSet(n), f.B0};
            break;
        }
        Induced c = induced_subgraph(g, core);
        SplitResult s = recognize_split(c.graph);
        if (s.is_split()) {
            inner = TC12Partition{to_host(s.partition().K, c.to_host, n),
                                  to_host(s.partition().S, c.to_host, n) | f.B0};
            break;
        }
        if (s.witness().obstruction_id != "2K2") {
            NoCertificate w = to_host(s.witness(), c.to_host);
            const CatalogEntry* e = f_catalog().find(w.obstruction_id);
            res.outcome = make_no(*e, w.witness, "F");
            return res;
        }
        const auto& w = s.witness().witness;
        ExactNeighborhoods nb = exact_neighborhoods(c.graph, {w[0], w[1], w[2], w[3]});
        Ctx ctx{c.graph, nb, &inconclusive};
        if (auto bad = audits(ctx)) {
            res.outcome = to_host(*bad, c.to_host);
            return res;
        }
        auto base = base_impl(ctx);
        if (auto* bad = std::get_if<NoCertificate>(&base)) {
            res.outcome = to_host(*bad, c.to_host);
            return res;
        }
        if (std::holds_alternative<std::monostate>(base)) {
            auto p = rescue(cur);
            if (!p) return res;
            inner = *p;
            break;
        }
        const auto& bp = std::get<BasePartition>(base);
        f.outer = TC12Partition{to_host(bp.partition.A, c.to_host, n), to_host(bp.partition.B, c.to_host, n)};
        for (int t = 0; t < 4; ++t) f.sample.push_back(c.to_host[w[t]]);
        for (const auto& part : nb.parts)
            for (std::size_t t = 0; t < part.size() && t < 2; ++t) f.sample.push_back(c.to_host[part[t]]);
        frames.push_back(std::move(f));
        cur = to_host(bp.recursion, c.to_host, n).members();
    }

    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
        std::vector<int> ev;
        if (auto p = merge_impl(g, it->outer, inner, ev)) {
            inner = TC12Partition{p->A, p->B | it->B0};
            continue;
        }
        std::vector<int> wide = ev;
        wide.insert(wide.end(), it->sample.begin(), it->sample.begin() + 4);
        auto w = witness_among(g, wide);
        if (!w) {
            wide.insert(wide.end(), it->sample.begin() + 4, it->sample.end());
            w = witness_among(g, wide);
        }
        if (!w) {
            for (int v : ev) {
                const auto& nbrs = g.neighbors(v);
                wide.insert(wide.end(), nbrs.begin(), nbrs.begin() + std::min<std::size_t>(2, nbrs.size()));
            }
            w = witness_among(g, wide);
        }
        if (w) {
            res.outcome = *w;
            return res;
        }
        auto p = rescue(it->vertices);
        if (!p) return res;
        inner = *p;
    }
    if (!verify_tc12_partition(g, inner)) {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        auto p = rescue(all);
        if (!p) return res;
        inner = *p;
    }
    res.outcome = inner;
    if (inconclusive) res.note = "an audit rule failed without a nearby witness";
    return res;
}

RecognitionResult to_recognition_result(const TC12Result& r) {
    RecognitionResult out;
    out.route = "tc12";
    out.note = r.note;
    if (r.yes()) {
        out.verdict = Verdict::Yes;
        out.certificate = r.partition();
    } else if (r.no()) {
        out.verdict = r.witness().kind == NoKind::PromiseViolation ? Verdict::Undecided : Verdict::No;
        out.certificate = r.witness();
    } else {
        out.verdict = Verdict::Undecided;
    }
    return out;
}

}  // namespace mt
