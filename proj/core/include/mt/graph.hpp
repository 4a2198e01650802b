#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mt {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}
    VertexSet(int universe, std::initializer_list<int> vs);
    static VertexSet of(int universe, const std::vector<int>& vs);
    static VertexSet full(int universe);

    int universe() const { return n_; }
    bool contains(int v) const { return v >= 0 && v < n_ && (w_[v >> 6] >> (v & 63)) & 1; }
    void insert(int v);
    void erase(int v) { w_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }
    int size() const;
    bool empty() const;
    int first() const;
    std::vector<int> members() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (uint64_t x = w_[i]; x; x &= x - 1) f(int(i * 64 + __builtin_ctzll(x)));
    }

    bool intersects(const VertexSet& o) const;
    bool subset_of(const VertexSet& o) const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

    const uint64_t* words() const { return w_.data(); }
    uint64_t* words() { return w_.data(); }
    int word_count() const { return int(w_.size()); }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Simple undirected graph on vertices 0..n-1. Sorted adjacency lists live in one flat array.
// Up to kDenseLimit vertices there is also a bit matrix for constant-time adjacency, when the
// graph has at most 64 vertices or is dense enough that the matrix is not much larger.
class Graph {
public:
    static constexpr int kDenseLimit = 8192;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long long size() const { return m_; }
    bool adjacent(int u, int v) const;
    // sorted
    std::span<const int> neighbors(int v) const { return {nbr_.data() + off_[v], nbr_.data() + off_[v + 1]}; }
    int degree(int v) const { return off_[v + 1] - off_[v]; }
    VertexSet neighborhood(int v) const;
    int count_neighbors_in(int v, const VertexSet& s) const;
    std::vector<std::pair<int, int>> edges() const;
    int max_degree() const;
    int min_degree() const;

    bool dense() const { return !mat_.empty() || n_ == 0; }
    int stride() const { return stride_; }
    const uint64_t* row(int v) const { return mat_.data() + std::size_t(v) * stride_; }
    // Valid only when order() <= 64.
    uint64_t row64(int v) const { return mat_[v]; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.off_ == b.off_ && a.nbr_ == b.nbr_; }

private:
    void build_matrix();

    int n_ = 0;
    long long m_ = 0;
    int stride_ = 0;
    std::vector<int> off_{0};  // neighbours of v are nbr_[off_[v] .. off_[v+1])
    std::vector<int> nbr_;
    std::vector<uint64_t> mat_;
};

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);

Graph complement(const Graph& g);
Graph relabel(const Graph& g, const std::vector<int>& perm);  // vertex v becomes perm[v]
Graph disjoint_union(const Graph& a, const Graph& b);

struct Induced {
    Graph graph;
    std::vector<int> to_host;  // new index -> host vertex
};
Induced induced_subgraph(const Graph& g, const VertexSet& s);
Induced induced_subgraph(const Graph& g, const std::vector<int>& ordered);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct DiameterInfo {
    int diameter = 0;
    std::vector<int> path;
    std::vector<int> centers;
};
std::optional<DiameterInfo> diameter_path(const Graph& g);

// Induced subgraph isomorphism. Returns phi with phi[p] = host vertex.
std::optional<std::vector<int>> find_induced(const Graph& pattern, const Graph& host);
std::optional<std::vector<int>> find_induced(const Graph& pattern, const Graph& host, const VertexSet& within);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_cograph(const Graph& g);
bool is_chordal(const Graph& g);
std::vector<int> lex_bfs(const Graph& g);
std::optional<std::vector<int>> find_C4(const Graph& g);
std::optional<std::vector<int>> find_2K2(const Graph& g);
std::optional<std::vector<int>> find_P4(const Graph& g);

// Bron-Kerbosch with pivoting. Stops when `visit` returns false or after `limit` cliques;
// returns false only in the second case.
bool for_each_maximal_clique(const Graph& g, const std::function<bool(const VertexSet&)>& visit,
                             long long limit = -1);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

}  // namespace mt
