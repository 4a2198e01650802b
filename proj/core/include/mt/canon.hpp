#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mt/graph.hpp"

namespace mt {

// graph6 string of the canonical relabeling.
using CanonicalForm = std::string;

constexpr int kCanonicalMaxOrder = 12;

CanonicalForm canonical_form(const Graph& g);
std::vector<int> canonical_labeling(const Graph& g);  // lab[i] = vertex placed at position i
bool isomorphic(const Graph& a, const Graph& b);

namespace small {

constexpr int kMax = 16;
using Rows = std::array<uint64_t, kMax>;

struct Canon {
    int n = 0;
    Rows rows{};                      // canonical adjacency rows
    std::array<int, kMax> lab{};      // lab[i] = original vertex at canonical position i
    std::array<int, kMax> orbit{};    // representative of each vertex's automorphism orbit (possibly finer)
};

// Canonical labeling of a graph given by adjacency bit rows, n <= 16.
void canonicalize(const uint64_t* rows, int n, Canon& out);

Rows rows_of(const Graph& g);
Graph to_graph(const uint64_t* rows, int n);

struct Key {
    unsigned __int128 bits = 0;
    friend bool operator==(const Key& a, const Key& b) { return a.bits == b.bits; }
    friend bool operator<(const Key& a, const Key& b) { return a.bits < b.bits; }
};
struct KeyHash {
    std::size_t operator()(const Key& k) const {
        uint64_t lo = uint64_t(k.bits), hi = uint64_t(k.bits >> 64);
        return std::size_t(lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2)));
    }
};

// Packs order and upper triangle; injective for n <= 15.
Key pack(const uint64_t* rows, int n);

}  // namespace small

}  // namespace mt
