#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mt/certificates.hpp"

namespace mt {

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One JSON document per result:
// { "class", "verdict", "kind", "partition" | "witness" + "obstruction_id" + "catalog",
//   "partition_omitted", "route", "note" }
std::string to_json(const RecognitionResult& r, GraphClass cls, int indent = 2);

struct ParsedResult {
    GraphClass cls = GraphClass::MT;
    RecognitionResult result;
};

// Vertex sets get universe max(order, largest vertex + 1), so out-of-range vertices are left
// for verification to reject. Throws SchemaError on anything the schema does not allow.
ParsedResult result_from_json(std::string_view text, int order);

std::string_view certificate_kind(const RecognitionResult& r);

}  // namespace mt
