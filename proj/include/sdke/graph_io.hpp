#pragma once

#include <string>
#include <string_view>

#include "sdke/decomposition.hpp"
#include "sdke/graph.hpp"
#include "sdke/matching.hpp"

namespace sdke {

/// Edge-list text: '#' comment lines, then "n m", then m lines "u v" with
/// 0-based ids. Blank lines are ignored. Throws InvalidInput on malformed
/// lines, a wrong edge count, or any Graph construction error.
Graph parse_edge_list(std::string_view text);

/// Canonical form: "n m" then edges in lexicographic order, one per line.
std::string serialize_edge_list(const Graph& g);

/// One matched pair "u v" per line; '#' comments and blank lines ignored.
/// Throws InvalidInput unless the pairs form a matching of g.
Matching parse_matching(const Graph& g, std::string_view text);
std::string serialize_matching(const Matching& m);

/// 64-bit FNV-1a digest of the canonical edge list, as 16 hex digits.
std::string graph_hash(const Graph& g);

/// Graphviz text. Matched edges are drawn red and bold; SD vertices are
/// filled black and KE vertices blue. Throws InvalidInput when the partition
/// or matching does not belong to g.
std::string export_dot(const Graph& g, const SdKePartition* partition = nullptr,
                       const Matching* matching = nullptr);

}  // namespace sdke
