#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sdke/alternating.hpp"
#include "sdke/graph.hpp"
#include "sdke/matching.hpp"

namespace sdke {

/// Why a vertex landed in the KE side: either its own mm-closed-walk search
/// failed, or its partner's did and the pair was moved together.
struct KeMarker {
  Vertex vertex = 0;
  Vertex failed_search = 0;  // vertex whose search found no closed walk
};

/// SD-KE partition of a matchable graph with the certificates that justify it.
struct SdKePartition {
  std::vector<Vertex> sd_vertices;  // sorted
  std::vector<Vertex> ke_vertices;  // sorted
  Subgraph sd_part;                 // G[V_SD]
  Subgraph ke_part;                 // G - G[V_SD]
  std::vector<Edge> cut;            // edges with one end on each side
  Matching matching;                // the perfect matching used
  std::vector<AlternatingWalk> witnesses;  // one per SD vertex, same order
  std::vector<KeMarker> ke_markers;        // one per KE vertex, same order

  bool is_sd(Vertex v) const;
};

/// The SD-KE separation: a vertex is SD exactly when it and its partner both
/// admit M-mm-alternating closed walks; a failed search sends the pair
/// {v, M(v)} to the KE side. Per-vertex searches run in parallel.
/// Throws NotMatchable unless m is perfect on g.
SdKePartition sd_ke_partition(const Graph& g, const Matching& m);

/// Reference form of the separation loop: visit vertices in `order`, drop a
/// vertex when its closed-walk search succeeds, otherwise move it and its
/// partner to KE. `order` must be a permutation of V(G).
std::vector<Vertex> ke_vertices_by_visit_order(const Graph& g,
                                               const Matching& m,
                                               std::span<const Vertex> order);

/// Partition computed with maximum_matching(g). Throws NotMatchable.
SdKePartition sd_ke_partition(const Graph& g);

Subgraph sd_part(const Graph& g);
Subgraph ke_part(const Graph& g);
std::vector<Edge> sd_ke_cut(const Graph& g);

/// V_SD for an arbitrary graph: vertices lying on an alternating
/// configuration for some maximum matching. Matchable graphs take the
/// polynomial route; otherwise every maximum matching is enumerated and each
/// unsaturated vertex x gets a pendant blossom (x - y, triangle y a b with
/// ab matched) so that stems hanging from x behave like blossom bases.
std::vector<Vertex> sd_vertices_general(const Graph& g,
                                        EnumerationLimits limits = {});

struct StabilityReport {
  Edge edge;
  bool avoidable = false;              // some maximum matching avoids the edge
  std::vector<Vertex> sd_before;       // V_SD(G)
  std::vector<Vertex> sd_after;        // V_SD(G - e)
  bool inclusion_holds = false;        // V_SD(G) within V_SD(G - e)
  bool equality_holds = false;         // V_SD(G) == V_SD(G - e)
  bool consistent = false;             // inclusion, and equality when avoidable
};

/// Edge-deletion stability for an edge of the KE part. Works on any graph
/// (the KE part is taken from sd_vertices_general). Throws InvalidInput when
/// e is not an edge with both ends in V_KE.
StabilityReport check_stability_under_deletion(const Graph& g, Edge e,
                                               EnumerationLimits limits = {});

}  // namespace sdke
