#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "mt/certificates.hpp"

namespace mt {

constexpr int kDefaultOracleCap = 24;

// Subset scans by increasing |A|; among verifying sets of least size the
// lexicographically least sorted vertex list is returned.
std::optional<MTPartition> mt_bruteforce(const Graph& g, int cap = kDefaultOracleCap);
std::optional<TC12Partition> tc12_bruteforce(const Graph& g, int cap = kDefaultOracleCap);
std::optional<SplitPartition> split_bruteforce(const Graph& g, int cap = kDefaultOracleCap);

using MembershipOracle = std::function<bool(const Graph&)>;
bool is_minimal_obstruction(const Graph& g, const MembershipOracle& member);

bool max_degree_le1(const Graph& g, const VertexSet& s);
bool min_degree_ge_size_minus2(const Graph& g, const VertexSet& s);

// Decision-only variants over adjacency rows (n <= 64); no size ordering.
bool decide_mt(const uint64_t* rows, int n);
bool decide_tc12(const uint64_t* rows, int n);
bool decide_split(const uint64_t* rows, int n);

bool is_member(GraphClass c, const Graph& g, int cap = kDefaultOracleCap);
MembershipOracle oracle_for(GraphClass c, int cap = kDefaultOracleCap);

}  // namespace mt
