#pragma once

#include "mt/certificates.hpp"
#include "mt/oracle.hpp"

namespace mt {

// Obstruction id used with catalog "oracle".
std::string oracle_witness_id(const Graph& h);

// Catalogs a no-answer for the class may cite.
bool catalog_allowed(GraphClass cls, std::string_view catalog, bool promise);

// Named catalogs by isomorphism; catalog "oracle" by checking minimality with the brute-force oracle.
Check verify_witness(const Graph& g, const NoCertificate& c, GraphClass cls, int cap = kDefaultOracleCap);

// Checks whatever the result carries against its verdict.
Check verify_result(const Graph& g, const RecognitionResult& r, GraphClass cls, int cap = kDefaultOracleCap);

}  // namespace mt
