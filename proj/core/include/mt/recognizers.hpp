#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mt/certificates.hpp"
#include "mt/oracle.hpp"

namespace mt {

// Input outside the class a recognizer was promised. Carries an induced witness when one is known.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& what, std::optional<NoCertificate> w = std::nullopt)
        : std::runtime_error(what), witness_(std::move(w)) {}
    const std::optional<NoCertificate>& witness() const { return witness_; }

private:
    std::optional<NoCertificate> witness_;
};

// C4-free input. No-answers are decisions; a witness is attached only when n <= oracle_cap.
RecognitionResult recognize_mt_c4free(const Graph& g, int oracle_cap = kDefaultOracleCap);

// Trees in linear time; no-answers cite the forest catalog.
RecognitionResult recognize_mt_tree(const Graph& t);
// Any forest: connected ones go to the tree route, others through the disconnected route.
RecognitionResult recognize_mt_forest(const Graph& f);

// Least center v of a nice connected graph (G - v has maximum degree at most 1).
std::optional<int> is_nice(const Graph& g);

using ConnectedSolver = std::function<RecognitionResult(const Graph&)>;
RecognitionResult recognize_mt_disconnected(const Graph& g, const ConnectedSolver& solve);

struct TypeClass {
    enum Tag { Neutral, TrueTwin, FalseTwin };
    std::vector<int> members;  // sorted
    Tag tag = Neutral;
};

struct TypePartition {
    std::vector<TypeClass> classes;  // ordered by least member
    std::vector<int> class_of;
};

TypePartition type_partition(const Graph& g);

struct TwinKernel {
    Graph kernel;
    std::vector<int> to_host;
    TypePartition types;
};

// Keeps the `keep` lowest-indexed vertices of each type class. Four is the least safe value:
// with three, K4+K3 reduces to K3+K3 and K(4,4) to K(3,3), turning non-members into members.
TwinKernel twin_reduce(const Graph& g, int keep = 4);

struct NdOptions {
    int oracle_cap = kDefaultOracleCap;
    long long node_budget = 2'000'000;
};

// Partition search over per-class counts. Absent with *exhausted = true means no MT-partition exists.
std::optional<MTPartition> profile_search(const Graph& g, const TypePartition& tp, long long node_budget,
                                          bool* exhausted = nullptr);

RecognitionResult recognize_mt_bounded_nd(const Graph& g, const NdOptions& opt = {});

// Cograph input; no-answers cite fcog.
RecognitionResult recognize_mt_cograph(const Graph& g, const NdOptions& opt = {});

RecognitionResult recognize_mt_oracle(const Graph& g, int oracle_cap = kDefaultOracleCap);

// A minimal obstruction inside g found by greedy deletion under the oracle (n <= cap).
// Cites a named catalog when the result is listed there, otherwise catalog "oracle".
std::optional<NoCertificate> oracle_witness(const Graph& g, GraphClass cls, int cap = kDefaultOracleCap);

enum class Mode { Auto, Oracle, Tree, Forest, C4Free, Cograph, Nd, Split, TC12 };

std::optional<Mode> parse_mode(std::string_view s);
std::string_view mode_name(Mode m);
GraphClass target_class(Mode m);  // Split and TC12 recognize their own classes

struct RecognizeOptions {
    int oracle_cap = kDefaultOracleCap;
    long long node_budget = 2'000'000;
};

// Throws PreconditionError when a restricted mode gets an input outside its class.
RecognitionResult recognize(const Graph& g, Mode mode, const RecognizeOptions& opt = {});

}  // namespace mt
