#pragma once
// JSON encodings shared by the cache, the CLI, and the verification
// reports.  Slopes render as {"p": ..., "q": ...}; braids as
// {"w": ..., "b": ..., "t": ...}.

#include <optional>

#include <json.hpp>

#include "onebridge/census.hpp"
#include "onebridge/oracle.hpp"

namespace onebridge {

using Json = nlohmann::ordered_json;

Json to_json(const Slope&);
Json to_json(const Braid&);
Json to_json(const AllowableTuple&);
Json to_json(const CaseWitness&);
Json to_json(const SlopeFillings&);
Json to_json(const TupleImage&);
Json to_json(const CensusRecord&);
Json to_json(const CensusSummary&);
Json to_json(const EquivalenceReport&);
Json to_json(const SweepReport&);
Json to_json(const MirrorReport&);

// Strict inverse of to_json(CensusRecord): rejects missing or
// ill-typed fields, out-of-range parameters, unsorted slope lists, and
// knot/canonical flags that contradict the parameters.
std::optional<CensusRecord> census_record_from_json(const Json&);

}  // namespace onebridge
