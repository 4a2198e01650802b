#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mt/canon.hpp"
#include "mt/graph.hpp"

namespace mt {

enum class GraphClass { MT, TC12, Split };
std::string_view class_name(GraphClass c);

struct MTPartition {
    VertexSet A, B;
};

struct MTFourPartition {
    VertexSet K, Mbar, S, M;
};

struct TC12Partition {
    VertexSet A, B;  // A is the clique side
};

struct SplitPartition {
    VertexSet K, S;
};

enum class NoKind { Obstruction, PromiseViolation };

struct NoCertificate {
    std::string obstruction_id;
    std::vector<int> witness;
    NoKind kind = NoKind::Obstruction;
    std::string catalog;  // name of the catalog holding obstruction_id
};

enum class Verdict { Yes, No, Undecided };
std::string_view verdict_name(Verdict v);

using Certificate = std::variant<std::monostate, MTPartition, MTFourPartition, TC12Partition, SplitPartition, NoCertificate>;

struct RecognitionResult {
    Verdict verdict = Verdict::Undecided;
    Certificate certificate;
    bool partition_omitted = false;
    std::string route;
    std::string note;
};

// Outcome of a verification: accept, or a clause id plus the offending vertices.
struct Check {
    bool ok = true;
    std::string clause;
    std::vector<int> vertices;
    std::string detail;

    explicit operator bool() const { return ok; }
    static Check accept() { return {}; }
    static Check reject(std::string clause, std::vector<int> vs = {}, std::string detail = {}) {
        return {false, std::move(clause), std::move(vs), std::move(detail)};
    }
    std::string describe() const;
};

Check verify_mt_partition(const Graph& g, const MTPartition& p);
Check verify_mt_four_partition(const Graph& g, const MTFourPartition& p);
MTFourPartition two_part_to_four(const Graph& g, const MTPartition& p);
MTPartition four_part_to_two(const MTFourPartition& p);
Check verify_tc12_partition(const Graph& g, const TC12Partition& p);
Check verify_split_partition(const Graph& g, const SplitPartition& p);

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    std::string name;
    Graph graph;
    CanonicalForm form;
    std::string note;
    bool promise = false;  // member of the class; only a witness against a promised input class
};

class ObstructionCatalog {
public:
    explicit ObstructionCatalog(std::string name = {}) : name_(std::move(name)) {}

    // Throws CatalogError when the name or the isomorphism class is already present.
    void add(std::string name, Graph g, std::string note = {}, bool promise = false);
    const CatalogEntry* find(std::string_view name) const;
    const CatalogEntry* find_form(const CanonicalForm& f) const;
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::vector<CatalogEntry> entries_;
};

Check verify_no_certificate(const Graph& g, const NoCertificate& c, const ObstructionCatalog& catalog);

}  // namespace mt
