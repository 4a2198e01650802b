#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <variant>

#include "mt/certificates.hpp"

namespace mt {

// Parts N_X around an induced 2K2 with edges anchor[0]anchor[1] and anchor[2]anchor[3].
// Bit t of the index X stands for anchor t (anchor label t+1).
struct ExactNeighborhoods {
    std::array<int, 4> anchors{};
    std::array<std::vector<int>, 16> parts;
    std::vector<int> code;  // code[v] = X for v in N_X, -1 for anchors

    const std::vector<int>& at(int mask) const { return parts[mask]; }
    // Labels are anchor labels 1..4, e.g. N({1,3}).
    const std::vector<int>& N(std::initializer_list<int> labels) const;
};

ExactNeighborhoods exact_neighborhoods(const Graph& g, const std::array<int, 4>& anchors);

// Absent when the traces of x and y on C are nested, otherwise an induced C4 {v, w, x, y}.
std::optional<std::vector<int>> check_clique_comparability(const Graph& g, const VertexSet& C, int x, int y);

// A vertex of xyz complete to C, or an induced C4 / C5 showing the hypotheses fail.
std::variant<int, NoCertificate> complete_vertex_over_clique(const Graph& g, const VertexSet& C,
                                                             const std::array<int, 3>& xyz);

// Absent when every audited adjacency rule holds; otherwise a verified witness from F.
std::optional<NoCertificate> lemma_audits(const Graph& g, const ExactNeighborhoods& nb);

enum class MergeMode { Rec1, Rec2, Rec3 };

struct BasePartition {
    TC12Partition partition;  // covers V minus recursion
    VertexSet recursion;
    MergeMode mode = MergeMode::Rec1;
};

// Requires that lemma_audits passed and no K1/K2 component is present.
// monostate: the construction failed and no witness was found nearby.
std::variant<BasePartition, NoCertificate, std::monostate> base_partition(const Graph& g, const ExactNeighborhoods& nb);

// Joins a partition of V minus the recursion set with one of the recursion set.
// monostate: the swap did not produce a valid partition and no witness was found nearby.
std::variant<TC12Partition, NoCertificate, std::monostate> merge_partitions(const Graph& g, const TC12Partition& outer,
                                                            const TC12Partition& inner, MergeMode mode);

struct TC12Result {
    // monostate: undecided (construction failed beyond the oracle cap).
    std::variant<TC12Partition, NoCertificate, std::monostate> outcome;
    int depth = 0;      // recursion levels, the last one ending in a split graph or only K1/K2 parts
    int fallbacks = 0;  // rounds whose construction failed and needed a global search
    std::string note;

    bool yes() const { return std::holds_alternative<TC12Partition>(outcome); }
    bool no() const { return std::holds_alternative<NoCertificate>(outcome); }
    const TC12Partition& partition() const { return std::get<TC12Partition>(outcome); }
    const NoCertificate& witness() const { return std::get<NoCertificate>(outcome); }
};

// No-answers cite F (C4 flagged as a promise violation) or, for C7, the holes catalog.
TC12Result recognize_tc12(const Graph& g, int oracle_cap = 24);

RecognitionResult to_recognition_result(const TC12Result& r);

}  // namespace mt
