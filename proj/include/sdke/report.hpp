#pragma once

#include <nlohmann/json.hpp>

#include "sdke/alternating.hpp"
#include "sdke/decomposition.hpp"
#include "sdke/determinantal.hpp"
#include "sdke/graph.hpp"
#include "sdke/matching.hpp"
#include "sdke/verification.hpp"

namespace sdke {

inline constexpr const char* kVersion = "0.1.0";

// JSON views of the library types. Key order is fixed so reports are
// byte-stable; big integers are decimal strings.
using Json = nlohmann::ordered_json;

Json to_json(const Edge& e);
Json to_json(const Graph& g);
Json to_json(const Matching& m);
Json to_json(const AlternatingWalk& w);
Json to_json(const SdKePartition& p);
Json to_json(const SachsSubgraph& s);
Json determinants_json(const FactorizationReport& r);
Json permanents_json(const FactorizationReport& r);
Json to_json(const Counterexample& c);
Json to_json(const TheoremReport& r);

/// Reads a walk back from to_json(AlternatingWalk). Throws InvalidInput.
AlternatingWalk walk_from_json(const Json& j);

}  // namespace sdke
