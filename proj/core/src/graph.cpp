#include "mt/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace mt {

VertexSet::VertexSet(int universe, std::initializer_list<int> vs) : VertexSet(universe) {
    for (int v : vs) insert(v);
}

VertexSet VertexSet::of(int universe, const std::vector<int>& vs) {
    VertexSet s(universe);
    for (int v : vs) s.insert(v);
    return s;
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.w_) w = ~uint64_t(0);
    if (universe & 63) s.w_.back() = (uint64_t(1) << (universe & 63)) - 1;
    return s;
}

void VertexSet::insert(int v) {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside set universe");
    w_[v >> 6] |= uint64_t(1) << (v & 63);
}

int VertexSet::size() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
}

bool VertexSet::empty() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
}

bool VertexSet::intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

bool VertexSet::subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
        uint64_t other = i < o.w_.size() ? o.w_[i] : 0;
        if (w_[i] & ~other) return false;
    }
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= i < o.w_.size() ? o.w_[i] : 0;
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

Graph::Graph(int n) : n_(n), off_(std::size_t(std::max(n, 0)) + 1, 0) {
    if (n < 0) throw std::invalid_argument("negative order");
    build_matrix();
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative order");
    std::vector<int> deg(n + 1, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::out_of_range("edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 0.." +
                                    std::to_string(n - 1));
        if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
        ++deg[u + 1];
        ++deg[v + 1];
    }
    for (int v = 0; v < n; ++v) deg[v + 1] += deg[v];
    std::vector<int> raw(deg[n]), fill(deg.begin(), deg.end() - 1);
    for (auto [u, v] : edges) {
        raw[fill[u]++] = v;
        raw[fill[v]++] = u;
    }
    // sort each list and drop repeated edges
    off_.assign(std::size_t(n) + 1, 0);
    nbr_.reserve(raw.size());
    for (int v = 0; v < n; ++v) {
        auto first = raw.begin() + deg[v], last = raw.begin() + deg[v + 1];
        std::sort(first, last);
        nbr_.insert(nbr_.end(), first, std::unique(first, last));
        off_[v + 1] = int(nbr_.size());
    }
    m_ = static_cast<long long>(nbr_.size()) / 2;
    build_matrix();
}

void Graph::build_matrix() {
    stride_ = (n_ + 63) / 64;
    // the matrix may cost at most a constant times the adjacency lists, so sparse graphs
    // are built in O(n + m); small graphs always get one
    if (n_ > kDenseLimit) return;
    if (n_ > 64 && std::size_t(n_) * stride_ > 8 * std::size_t(n_ + 2 * m_)) return;
    mat_.assign(std::size_t(n_) * stride_, 0);
    for (int v = 0; v < n_; ++v)
        for (int u : neighbors(v)) mat_[std::size_t(v) * stride_ + (u >> 6)] |= uint64_t(1) << (u & 63);
}

bool Graph::adjacent(int u, int v) const {
    if (!mat_.empty()) return (mat_[std::size_t(u) * stride_ + (v >> 6)] >> (v & 63)) & 1;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto a = neighbors(u);
    return std::binary_search(a.begin(), a.end(), v);
}

VertexSet Graph::neighborhood(int v) const {
    VertexSet s(n_);
    if (!mat_.empty())
        std::copy(row(v), row(v) + stride_, s.words());
    else
        for (int u : neighbors(v)) s.insert(u);
    return s;
}

int Graph::count_neighbors_in(int v, const VertexSet& s) const {
    int c = 0;
    if (!mat_.empty()) {
        const uint64_t* r = row(v);
        const uint64_t* w = s.words();
        for (int i = 0; i < stride_; ++i) c += __builtin_popcountll(r[i] & w[i]);
    } else {
        for (int u : neighbors(v)) c += s.contains(u);
    }
    return c;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(std::size_t(m_));
    for (int v = 0; v < n_; ++v)
        for (int u : neighbors(v))
            if (v < u) out.emplace_back(v, u);
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

// graph6

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    std::size_t base = 0;
    if (text.substr(0, 10) == ">>graph6<<") {
        text.remove_prefix(10);
        base = 10;
    }
    if (text.empty()) throw ParseError("graph6: empty input", base);
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = text[i];
        if (c < 63 || c > 126) throw ParseError("graph6: character outside 63..126", base + i);
    }
    std::size_t pos = 0;
    long n;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() < 4) throw ParseError("graph6: truncated length header", base + text.size());
        if (text[1] == '~') throw ParseError("graph6: 8-byte length header not supported", base + 1);
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - 63);
        if (n < 63) throw ParseError("graph6: non-canonical length header", base);
        pos = 4;
    }
    std::size_t bits = std::size_t(n) * (n - 1) / 2;
    std::size_t need = (bits + 5) / 6;
    if (text.size() - pos != need)
        throw ParseError("graph6: expected " + std::to_string(need) + " edge bytes, got " +
                             std::to_string(text.size() - pos),
                         base + std::min(text.size(), pos + need));
    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    if (bits % 6) {
        int last = text[pos + need - 1] - 63;
        int pad = 6 - int(bits % 6);
        if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", base + pos + need - 1);
    }
    return Graph(int(n), edges);
}

std::string write_graph6(const Graph& g) {
    long n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(char(n + 63));
    } else if (n < (1L << 18)) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(char(((n >> s) & 63) + 63));
    } else {
        throw SizeError("graph6: order must be below 2^18");
    }
    int acc = 0, cnt = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | int(g.adjacent(i, j));
            if (++cnt == 6) {
                out.push_back(char(acc + 63));
                acc = cnt = 0;
            }
        }
    if (cnt) out.push_back(char((acc << (6 - cnt)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<long, std::size_t>> toks;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace((unsigned char)text[i])) {
            ++i;
            continue;
        }
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace((unsigned char)text[i])) ++i;
        std::string_view t = text.substr(start, i - start);
        bool ok = !t.empty() && t.size() < 10;
        for (char c : t) ok = ok && std::isdigit((unsigned char)c);
        if (!ok) throw ParseError("edge list: expected a non-negative integer, got '" + std::string(t) + "'", start);
        toks.emplace_back(std::stol(std::string(t)), start);
    }
    if (toks.empty()) throw ParseError("edge list: missing vertex count", 0);
    long n = toks[0].first;
    if ((toks.size() - 1) % 2) throw ParseError("edge list: dangling vertex without a partner", toks.back().second);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 1; k + 1 < toks.size(); k += 2) {
        auto [u, ou] = toks[k];
        auto [v, ov] = toks[k + 1];
        if (u >= n) throw ParseError("edge list: vertex " + std::to_string(u) + " >= n", ou);
        if (v >= n) throw ParseError("edge list: vertex " + std::to_string(v) + " >= n", ov);
        if (u == v) throw ParseError("edge list: self-loop at " + std::to_string(u), ou);
        edges.emplace_back(int(u), int(v));
    }
    return Graph(int(n), edges);
}

Graph complement(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            if (!g.adjacent(u, v)) e.emplace_back(v, u);
    return Graph(n, e);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), e);
}

Induced induced_subgraph(const Graph& g, const std::vector<int>& ordered) {
    std::vector<int> idx(g.order(), -1);
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        int v = ordered[i];
        if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
        if (idx[v] >= 0) throw std::invalid_argument("vertex " + std::to_string(v) + " repeated");
        idx[v] = int(i);
    }
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < ordered.size(); ++i)
        for (int u : g.neighbors(ordered[i]))
            if (idx[u] > int(i)) e.emplace_back(int(i), idx[u]);
    return {Graph(int(ordered.size()), e), ordered};
}

Induced induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() > g.order()) {
        int bad = -1;
        s.for_each([&](int v) {
            if (v >= g.order() && bad < 0) bad = v;
        });
        if (bad >= 0) throw std::out_of_range("vertex " + std::to_string(bad) + " not in graph");
    }
    return induced_subgraph(g, s.members());
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int c = int(out.size());
        out.emplace_back(n);
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[c].insert(v);
            for (int u : g.neighbors(v))
                if (comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
        }
    }
    return out;
}


namespace {

std::vector<int> bfs(const Graph& g, int s, std::vector<int>& parent) {
    std::vector<int> dist(g.order(), -1), queue;
    parent.assign(g.order(), -1);
    queue.reserve(g.order());
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                parent[u] = v;
                queue.push_back(u);
            }
    }
    return dist;
}

bool reaches_all(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == g.order();
}

}  // namespace

bool is_connected(const Graph& g) { return reaches_all(g); }

std::optional<DiameterInfo> diameter_path(const Graph& g) {
    int n = g.order();
    if (n == 0) return std::nullopt;
    std::vector<int> parent;
    int a = 0, b = 0, best = -1;
    if (g.size() == n - 1) {
        auto d0 = bfs(g, 0, parent);
        if (std::find(d0.begin(), d0.end(), -1) != d0.end()) return std::nullopt;
        a = int(std::max_element(d0.begin(), d0.end()) - d0.begin());
        auto da = bfs(g, a, parent);
        b = int(std::max_element(da.begin(), da.end()) - da.begin());
        best = da[b];
    } else {
        if (!reaches_all(g)) return std::nullopt;
        for (int s = 0; s < n; ++s) {
            auto d = bfs(g, s, parent);
            int t = int(std::max_element(d.begin(), d.end()) - d.begin());
            if (d[t] > best) {
                best = d[t];
                a = s;
                b = t;
            }
        }
        bfs(g, a, parent);
    }
    DiameterInfo info;
    info.diameter = best;
    for (int v = b; v != -1; v = parent[v]) info.path.push_back(v);
    std::reverse(info.path.begin(), info.path.end());
    info.centers.push_back(info.path[best / 2]);
    if (best % 2) info.centers.push_back(info.path[best / 2 + 1]);
    return info;
}

namespace {

struct InducedMatcher {
    const Graph& P;
    const Graph& H;
    int k, W;
    std::vector<int> order, pdeg;
    std::vector<int> phi;
    std::vector<uint64_t> base, used;
    std::vector<std::vector<uint64_t>> rows;  // host rows for mapped vertices, by depth
    std::vector<uint64_t> cand;

    InducedMatcher(const Graph& p, const Graph& h, const VertexSet* within)
        : P(p), H(h), k(p.order()), W((h.order() + 63) / 64), phi(p.order(), -1), base(W, 0), used(W, 0),
          rows(p.order(), std::vector<uint64_t>(W, 0)), cand(std::size_t(p.order()) * W, 0) {
        if (within)
            for (int i = 0; i < W && i < within->word_count(); ++i) base[i] = within->words()[i];
        else {
            VertexSet all = VertexSet::full(h.order());
            std::copy(all.words(), all.words() + W, base.begin());
        }
        std::vector<int> placed(k, 0), conn(k, 0);
        for (int d = 0; d < k; ++d) {
            int best = -1;
            for (int p = 0; p < k; ++p) {
                if (placed[p]) continue;
                if (best < 0 || conn[p] > conn[best] || (conn[p] == conn[best] && P.degree(p) > P.degree(best)))
                    best = p;
            }
            placed[best] = 1;
            order.push_back(best);
            for (int u : P.neighbors(best)) conn[u]++;
        }
    }

    void load_row(int v, std::vector<uint64_t>& dst) {
        if (H.dense()) {
            std::copy(H.row(v), H.row(v) + W, dst.begin());
        } else {
            std::fill(dst.begin(), dst.end(), 0);
            for (int u : H.neighbors(v)) dst[u >> 6] |= uint64_t(1) << (u & 63);
        }
    }

    bool run(int d) {
        if (d == k) return true;
        int p = order[d];
        uint64_t* c = cand.data() + std::size_t(d) * W;
        for (int i = 0; i < W; ++i) c[i] = base[i] & ~used[i];
        for (int e = 0; e < d; ++e) {
            bool adj = P.adjacent(p, order[e]);
            const auto& r = rows[e];
            if (adj)
                for (int i = 0; i < W; ++i) c[i] &= r[i];
            else
                for (int i = 0; i < W; ++i) c[i] &= ~r[i];
        }
        int need = P.degree(p);
        for (int i = 0; i < W; ++i) {
            for (uint64_t x = c[i]; x; x &= x - 1) {
                int v = i * 64 + __builtin_ctzll(x);
                if (H.degree(v) < need) continue;
                phi[p] = v;
                used[v >> 6] |= uint64_t(1) << (v & 63);
                load_row(v, rows[d]);
                if (run(d + 1)) return true;
                used[v >> 6] &= ~(uint64_t(1) << (v & 63));
            }
        }
        phi[p] = -1;
        return false;
    }
};

std::optional<std::vector<int>> find_induced_impl(const Graph& pattern, const Graph& host, const VertexSet* within) {
    if (pattern.order() > host.order()) return std::nullopt;
    if (within && within->size() < pattern.order()) return std::nullopt;
    if (pattern.order() == 0) return std::vector<int>{};
    InducedMatcher m(pattern, host, within);
    if (!m.run(0)) return std::nullopt;
    return m.phi;
}

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& pattern, const Graph& host) {
    return find_induced_impl(pattern, host, nullptr);
}

std::optional<std::vector<int>> find_induced(const Graph& pattern, const Graph& host, const VertexSet& within) {
    return find_induced_impl(pattern, host, &within);
}

bool is_forest(const Graph& g) {
    int n = g.order();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges()) {
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

bool is_tree(const Graph& g) { return g.order() > 0 && g.size() == g.order() - 1 && reaches_all(g); }

namespace {

bool cograph_rec(const Graph& g, const std::vector<VertexSet>& nb, const VertexSet& s) {
    if (s.size() <= 1) return true;
    auto split = [&](bool co) {
        std::vector<VertexSet> parts;
        VertexSet left = s;
        while (!left.empty()) {
            VertexSet comp(g.order());
            std::vector<int> stack{left.first()};
            left.erase(stack[0]);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.insert(v);
                VertexSet next = co ? left - nb[v] : left & nb[v];
                next.for_each([&](int u) {
                    left.erase(u);
                    stack.push_back(u);
                });
            }
            parts.push_back(std::move(comp));
        }
        return parts;
    };
    auto parts = split(false);
    if (parts.size() == 1) parts = split(true);
    if (parts.size() == 1) return false;
    for (auto& p : parts)
        if (!cograph_rec(g, nb, p)) return false;
    return true;
}

}  // namespace

bool is_cograph(const Graph& g) {
    std::vector<VertexSet> nb;
    nb.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) nb.push_back(g.neighborhood(v));
    return cograph_rec(g, nb, VertexSet::full(g.order()));
}

std::vector<int> lex_bfs(const Graph& g) {
    // Partition refinement over an array of contiguous cells.
    int n = g.order();
    std::vector<int> ord(n), pos(n), cell(n);
    for (int i = 0; i < n; ++i) ord[i] = pos[i] = i, cell[i] = 0;
    struct Cell {
        int start, end, split_round = -1, child = -1;
    };
    std::vector<Cell> cells{{0, n}};
    for (int i = 0; i < n; ++i) {
        int v = ord[i];
        cells[cell[v]].start++;
        for (int w : g.neighbors(v)) {
            if (pos[w] <= i) continue;
            int c = cell[w];
            if (cells[c].split_round != i) {
                cells[c].split_round = i;
                cells[c].child = int(cells.size());
                cells.push_back({cells[c].start, cells[c].start});
            }
            int nc = cells[c].child;
            int front = cells[c].start;
            int u = ord[front];
            std::swap(ord[front], ord[pos[w]]);
            pos[u] = pos[w];
            pos[w] = front;
            cells[c].start++;
            cells[nc].end++;
            cell[w] = nc;
        }
    }
    return ord;
}

bool is_chordal(const Graph& g) {
    int n = g.order();
    auto ord = lex_bfs(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ord[i]] = i;
    for (int v : ord) {
        int parent = -1;
        for (int u : g.neighbors(v))
            if (pos[u] < pos[v] && (parent < 0 || pos[u] > pos[parent])) parent = u;
        if (parent < 0) continue;
        for (int u : g.neighbors(v))
            if (pos[u] < pos[v] && u != parent && !g.adjacent(u, parent)) return false;
    }
    return true;
}

std::optional<std::vector<int>> find_C4(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> seen(n);
    std::vector<int> touched;
    for (int u = 0; u < n; ++u) {
        for (int w : touched) seen[w].clear();
        touched.clear();
        for (int x : g.neighbors(u))
            for (int w : g.neighbors(x)) {
                if (w <= u || g.adjacent(u, w)) continue;
                for (int y : seen[w])
                    if (!g.adjacent(x, y)) return std::vector<int>{u, x, w, y};
                if (seen[w].empty()) touched.push_back(w);
                seen[w].push_back(x);
            }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_2K2(const Graph& g) {
    int n = g.order();
    std::vector<int> mark(n, -1);
    auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        int stamp = int(e);
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

std::optional<std::vector<int>> find_P4(const Graph& g) { return find_induced(path_graph(4), g); }

bool for_each_maximal_clique(const Graph& g, const std::function<bool(const VertexSet&)>& visit, long long limit) {
    int n = g.order();
    std::vector<VertexSet> nb;
    nb.reserve(n);
    for (int v = 0; v < n; ++v) nb.push_back(g.neighborhood(v));
    long long seen = 0;
    bool stopped = false, capped = false;
    VertexSet R(n);
    std::function<void(VertexSet, VertexSet)> expand = [&](VertexSet P, VertexSet X) {
        if (stopped) return;
        if (P.empty()) {
            if (X.empty()) {
                if (limit >= 0 && seen >= limit) {
                    stopped = capped = true;
                    return;
                }
                ++seen;
                if (!visit(R)) stopped = true;
            }
            return;
        }
        int pivot = -1, best = -1;
        for (const VertexSet* s : {&P, &X})
            s->for_each([&](int u) {
                int c = (P & nb[u]).size();
                if (c > best) best = c, pivot = u;
            });
        for (int v : (P - nb[pivot]).members()) {
            R.insert(v);
            expand(P & nb[v], X & nb[v]);
            R.erase(v);
            if (stopped) return;
            P.erase(v);
            X.insert(v);
        }
    };
    if (n > 0) expand(VertexSet::full(n), VertexSet(n));
    else visit(R);
    return !capped;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

}  // namespace mt
