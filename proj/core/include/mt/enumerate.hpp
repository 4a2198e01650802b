#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "mt/certificates.hpp"

namespace mt {

enum class Filter { None, Chordal, Forest, Cograph, C4Free };

std::optional<Filter> parse_filter(std::string_view s);
std::string_view filter_name(Filter f);
bool passes(Filter f, const Graph& g);

constexpr int kEnumerateMaxOrder = 10;

struct EnumerateOptions {
    int workers = 0;  // 0: hardware concurrency
    // Called after each order is complete, with the number of classes of that order.
    std::function<void(int order, std::size_t classes)> on_level;
};

// Canonical augmentation: a child is kept when deleting its new vertex gives the least
// canonical form among all single-vertex deletions. Visits orders 1..n_max, each sorted by
// canonical form; every visited graph is in canonical labeling. Throws SizeError above the cap.
void enumerate_graphs(int n_max, Filter filter, const std::function<void(const Graph&)>& visit,
                      const EnumerateOptions& opt = {});

// counts[k] = number of classes on k vertices, k = 0..n_max (counts[0] = 1).
std::vector<std::size_t> count_graphs(int n_max, Filter filter, const EnumerateOptions& opt = {});

struct ObstructionSearch {
    ObstructionCatalog catalog;          // entry names are canonical graph6, sorted
    std::vector<std::size_t> per_order;  // index = order, 0..n_max
};

ObstructionSearch find_minimal_obstructions(int n_max, GraphClass cls, Filter filter,
                                            const EnumerateOptions& opt = {});

// Disjoint unions of enumerated connected graphs with total order at most n_max.
ObstructionSearch disconnected_minimal_obstructions(int n_max, const EnumerateOptions& opt = {});

}  // namespace mt
