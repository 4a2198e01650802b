#include "mt/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

#include "mt/oracle.hpp"

namespace mt {

using small::Key;

namespace {

constexpr uint64_t bit(int v) { return uint64_t(1) << v; }

void unpack(const Key& k, int n, uint64_t* rows) {
    std::fill(rows, rows + n, 0);
    int total = n * (n - 1) / 2, t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if ((k.bits >> (total - 1 - t)) & 1) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
}

void delete_vertex(const uint64_t* rows, int n, int v, uint64_t* out) {
    uint64_t low = bit(v) - 1;
    for (int i = 0, k = 0; i < n; ++i) {
        if (i == v) continue;
        uint64_t r = rows[i];
        out[k++] = (r & low) | ((r >> 1) & ~low);
    }
}

bool chordal_rows(const uint64_t* r, int n) {
    uint64_t left = bit(n) - 1;
    while (left) {
        bool found = false;
        for (uint64_t x = left; x; x &= x - 1) {
            int v = __builtin_ctzll(x);
            uint64_t nb = r[v] & left;
            bool clique = true;
            for (uint64_t y = nb; y && clique; y &= y - 1) {
                int u = __builtin_ctzll(y);
                clique = (nb & ~bit(u) & ~r[u]) == 0;
            }
            if (clique) {
                left &= ~bit(v);
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

uint64_t component_of(const uint64_t* r, uint64_t within, int v, bool complemented) {
    uint64_t seen = bit(v), frontier = bit(v);
    while (frontier) {
        int u = __builtin_ctzll(frontier);
        frontier &= frontier - 1;
        uint64_t nb = (complemented ? ~r[u] & ~bit(u) : r[u]) & within & ~seen;
        seen |= nb;
        frontier |= nb;
    }
    return seen;
}

bool forest_rows(const uint64_t* r, int n) {
    int edges = 0, comps = 0;
    uint64_t left = bit(n) - 1;
    for (int v = 0; v < n; ++v) edges += __builtin_popcountll(r[v]);
    while (left) {
        left &= ~component_of(r, left, __builtin_ctzll(left), false);
        ++comps;
    }
    return edges / 2 == n - comps;
}

// P4-free iff every induced subgraph on two or more vertices is disconnected or co-disconnected.
bool cograph_on(const uint64_t* r, uint64_t s) {
    if (__builtin_popcountll(s) <= 1) return true;
    for (bool co : {false, true}) {
        uint64_t first = component_of(r, s, __builtin_ctzll(s), co);
        if (first != s) {
            for (uint64_t left = s; left;) {
                uint64_t c = component_of(r, left, __builtin_ctzll(left), co);
                if (!cograph_on(r, c)) return false;
                left &= ~c;
            }
            return true;
        }
    }
    return false;
}

bool c4_free_rows(const uint64_t* r, int n) {
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (r[u] & bit(v)) continue;
            uint64_t c = r[u] & r[v];
            for (uint64_t x = c; x; x &= x - 1) {
                int a = __builtin_ctzll(x);
                if (c & ~r[a] & ~bit(a)) return false;
            }
        }
    return true;
}

bool connected_rows(const uint64_t* r, int n) { return n == 0 || component_of(r, bit(n) - 1, 0, false) == bit(n) - 1; }

bool passes_rows(Filter f, const uint64_t* r, int n) {
    switch (f) {
        case Filter::None: return true;
        case Filter::Chordal: return chordal_rows(r, n);
        case Filter::Forest: return forest_rows(r, n);
        case Filter::Cograph: return cograph_on(r, bit(n) - 1);
        case Filter::C4Free: return c4_free_rows(r, n);
    }
    return false;
}

int worker_count(const EnumerateOptions& opt) {
    int w = opt.workers > 0 ? opt.workers : int(std::thread::hardware_concurrency());
    return std::max(1, w);
}

template <class F>
void parallel_for(std::size_t count, int workers, F&& body) {
    std::atomic<std::size_t> next{0};
    auto run = [&](int wid) {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i, wid);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();
}

// Children of every parent on n-1 vertices, sorted by canonical form.
std::vector<Key> next_level(const std::vector<Key>& parents, int n, Filter f, int workers) {
    std::vector<std::vector<Key>> out(workers);
    parallel_for(parents.size(), workers, [&](std::size_t pi, int wid) {
        const Key& pk = parents[pi];
        uint64_t p[small::kMax], c[small::kMax], d[small::kMax];
        unpack(pk, n - 1, p);
        std::unordered_set<Key, small::KeyHash> seen;
        small::Canon cc, cd;
        for (uint64_t s = 0; s < bit(n - 1); ++s) {
            for (int i = 0; i < n - 1; ++i) c[i] = p[i] | (((s >> i) & 1) << (n - 1));
            c[n - 1] = s;
            if (!passes_rows(f, c, n)) continue;
            small::canonicalize(c, n, cc);
            Key ck = small::pack(cc.rows.data(), n);
            if (!seen.insert(ck).second) continue;
            bool keep = true;
            uint64_t tested = bit(cc.orbit[n - 1]);
            for (int v = 0; v < n - 1 && keep; ++v) {
                if (tested & bit(cc.orbit[v])) continue;
                tested |= bit(cc.orbit[v]);
                delete_vertex(c, n, v, d);
                small::canonicalize(d, n - 1, cd);
                keep = !(small::pack(cd.rows.data(), n - 1) < pk);
            }
            if (keep) out[wid].push_back(ck);
        }
    });
    std::vector<Key> all;
    for (auto& v : out) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    return all;
}

// Runs the augmentation, handing each completed level (sorted keys) to `level`.
template <class F>
void run_levels(int n_max, Filter f, const EnumerateOptions& opt, F&& level) {
    if (n_max > kEnumerateMaxOrder)
        throw SizeError("enumeration supports at most " + std::to_string(kEnumerateMaxOrder) + " vertices");
    int workers = worker_count(opt);
    std::vector<Key> cur;
    for (int n = 1; n <= n_max; ++n) {
        if (n == 1) {
            uint64_t r[1] = {0};
            cur = {small::pack(r, 1)};
        } else {
            cur = next_level(cur, n, f, workers);
        }
        level(n, cur);
        if (opt.on_level) opt.on_level(n, cur.size());
    }
}

using Decider = bool (*)(const uint64_t*, int);

Decider decider(GraphClass cls) {
    switch (cls) {
        case GraphClass::MT: return decide_mt;
        case GraphClass::TC12: return decide_tc12;
        case GraphClass::Split: return decide_split;
    }
    return decide_mt;
}

bool minimal_rows(Decider member, const uint64_t* r, int n) {
    if (member(r, n)) return false;
    uint64_t d[small::kMax];
    for (int v = 0; v < n; ++v) {
        delete_vertex(r, n, v, d);
        if (!member(d, n - 1)) return false;
    }
    return true;
}

ObstructionSearch finish(std::string name, std::vector<std::pair<Key, int>> found, int n_max) {
    ObstructionSearch res{ObstructionCatalog(std::move(name)), std::vector<std::size_t>(n_max + 1, 0)};
    std::vector<std::pair<std::string, Graph>> named;
    for (auto& [k, n] : found) {
        uint64_t r[small::kMax];
        unpack(k, n, r);
        Graph g = small::to_graph(r, n);
        named.emplace_back(write_graph6(g), g);
        ++res.per_order[n];
    }
    std::sort(named.begin(), named.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [s, g] : named) res.catalog.add(s, g);
    return res;
}

}  // namespace

std::optional<Filter> parse_filter(std::string_view s) {
    for (Filter f : {Filter::None, Filter::Chordal, Filter::Forest, Filter::Cograph, Filter::C4Free})
        if (filter_name(f) == s) return f;
    return std::nullopt;
}

std::string_view filter_name(Filter f) {
    switch (f) {
        case Filter::None: return "none";
        case Filter::Chordal: return "chordal";
        case Filter::Forest: return "forest";
        case Filter::Cograph: return "cograph";
        case Filter::C4Free: return "C4-free";
    }
    return "?";
}

bool passes(Filter f, const Graph& g) {
    auto r = small::rows_of(g);
    return passes_rows(f, r.data(), g.order());
}

void enumerate_graphs(int n_max, Filter filter, const std::function<void(const Graph&)>& visit,
                      const EnumerateOptions& opt) {
    run_levels(n_max, filter, opt, [&](int n, const std::vector<Key>& keys) {
        uint64_t r[small::kMax];
        for (const Key& k : keys) {
            unpack(k, n, r);
            visit(small::to_graph(r, n));
        }
    });
}

std::vector<std::size_t> count_graphs(int n_max, Filter filter, const EnumerateOptions& opt) {
    std::vector<std::size_t> counts(std::max(n_max, 0) + 1, 0);
    counts[0] = 1;
    run_levels(n_max, filter, opt, [&](int n, const std::vector<Key>& keys) { counts[n] = keys.size(); });
    return counts;
}

ObstructionSearch find_minimal_obstructions(int n_max, GraphClass cls, Filter filter, const EnumerateOptions& opt) {
    Decider member = decider(cls);
    int workers = worker_count(opt);
    std::vector<std::pair<Key, int>> found;
    run_levels(n_max, filter, opt, [&](int n, const std::vector<Key>& keys) {
        std::vector<char> hit(keys.size(), 0);
        parallel_for(keys.size(), workers, [&](std::size_t i, int) {
            uint64_t r[small::kMax];
            unpack(keys[i], n, r);
            hit[i] = minimal_rows(member, r, n);
        });
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (hit[i]) found.emplace_back(keys[i], n);
    });
    std::string name = std::string(class_name(cls)) + "-minimal";
    if (filter != Filter::None) name += "-" + std::string(filter_name(filter));
    return finish(name, std::move(found), n_max);
}

ObstructionSearch disconnected_minimal_obstructions(int n_max, const EnumerateOptions& opt) {
    // Connected classes by order; a disconnected graph on n_max vertices has components below n_max.
    std::vector<std::vector<Key>> conn(std::max(n_max, 1));
    if (n_max >= 2)
        run_levels(n_max - 1, Filter::None, opt, [&](int n, const std::vector<Key>& keys) {
            uint64_t r[small::kMax];
            for (const Key& k : keys) {
                unpack(k, n, r);
                if (connected_rows(r, n)) conn[n].push_back(k);
            }
        });

    struct Part {
        int n;
        std::size_t idx;
    };
    std::vector<std::vector<Part>> candidates;
    std::vector<Part> stack;
    // Multisets as non-increasing (order, index) sequences.
    auto extend = [&](auto&& self, int room, Part cap) -> void {
        if (stack.size() >= 2) candidates.push_back(stack);
        for (int n = std::min(room, cap.n); n >= 1; --n) {
            std::size_t top = n == cap.n ? cap.idx + 1 : conn[n].size();
            for (std::size_t i = 0; i < top; ++i) {
                stack.push_back({n, i});
                self(self, room - n, Part{n, i});
                stack.pop_back();
            }
        }
    };
    if (n_max >= 2) extend(extend, n_max, Part{n_max - 1, conn[n_max - 1].size() - 1});

    Decider member = decider(GraphClass::MT);
    std::vector<char> hit(candidates.size(), 0);
    std::vector<Key> keys(candidates.size());
    std::vector<int> orders(candidates.size());
    parallel_for(candidates.size(), worker_count(opt), [&](std::size_t ci, int) {
        uint64_t r[small::kMax] = {}, part[small::kMax];
        int base = 0;
        for (const Part& p : candidates[ci]) {
            unpack(conn[p.n][p.idx], p.n, part);
            for (int i = 0; i < p.n; ++i) r[base + i] = part[i] << base;
            base += p.n;
        }
        if (!minimal_rows(member, r, base)) return;
        small::Canon c;
        small::canonicalize(r, base, c);
        keys[ci] = small::pack(c.rows.data(), base);
        orders[ci] = base;
        hit[ci] = 1;
    });
    std::vector<std::pair<Key, int>> found;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (hit[i]) found.emplace_back(keys[i], orders[i]);
    return finish("mt-minimal-disconnected", std::move(found), n_max);
}

}  // namespace mt
