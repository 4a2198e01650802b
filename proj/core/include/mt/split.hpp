#pragma once

#include <variant>

#include "mt/certificates.hpp"

namespace mt {

struct SplitResult {
    std::variant<SplitPartition, NoCertificate> outcome;
    // Set when the direct C5 construction failed its audit and a pattern search was used instead.
    bool used_fallback = false;

    bool is_split() const { return std::holds_alternative<SplitPartition>(outcome); }
    const SplitPartition& partition() const { return std::get<SplitPartition>(outcome); }
    const NoCertificate& witness() const { return std::get<NoCertificate>(outcome); }
};

// Degree-sequence decision only.
bool is_split(const Graph& g);

// Certifying recognition. A no-answer carries 2K2 when the graph has one,
// otherwise C4, otherwise C5; ids refer to split_catalog().
SplitResult recognize_split(const Graph& g);

RecognitionResult to_recognition_result(const SplitResult& r);

}  // namespace mt
