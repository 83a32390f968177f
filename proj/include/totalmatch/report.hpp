#pragma once

// JSON forms of results, and their inverses for round-trip checks.

#include "totalmatch/forest_delta.hpp"
#include "totalmatch/structure.hpp"
#include "totalmatch/subdet.hpp"
#include "totalmatch/total_matching.hpp"

#include "json.hpp"

namespace totalmatch {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json big_to_json(const BigInt& x);
BigInt big_from_json(const Json& j);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const ElementColoring& c);
ElementColoring coloring_from_json(const Json& j);

Json to_json(const SubdetResult& r);
SubdetResult subdet_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const DeltaOutcome& o);
DeltaOutcome outcome_from_json(const Json& j);

Json to_json(const Graph& g, const TotalMatching& t);
TotalMatching matching_from_json(const Json& j);

Json to_json(const ForestPair& p);
ForestPair pair_from_json(const Json& j);

Json to_json(const DegreeBounds& b);

/// Multi-line `name: value` text for the same objects.
std::string certificate_text(const Certificate& c);
std::string outcome_text(const DeltaOutcome& o, long long bound);

}  // namespace totalmatch
