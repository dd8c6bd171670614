#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sdke/graph.hpp"
#include "sdke/matching.hpp"

namespace sdke {

/// First/last edge membership of an alternating walk: m = matched, n = not.
enum class WalkKind { kMM, kNN, kMN, kNM };

std::string_view to_string(WalkKind kind);
std::optional<WalkKind> parse_walk_kind(std::string_view text);

/// Vertex sequence v0 v1 ... vk with repetition allowed.
struct AlternatingWalk {
  std::vector<Vertex> vertices;
  WalkKind kind = WalkKind::kMM;

  std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  bool closed() const {
    return vertices.size() > 1 && vertices.front() == vertices.back();
  }
};

enum class WalkDefect {
  kNone,
  kTooShort,          // no edges
  kVertexOutOfRange,
  kNotAnEdge,
  kNotAlternating,    // two consecutive edges with the same M-membership
  kKindMismatch,      // first/last edge disagree with the kind tag
};

std::string_view to_string(WalkDefect defect);

struct WalkCheck {
  WalkDefect defect = WalkDefect::kNone;
  std::size_t position = 0;  // index of the offending edge, when relevant

  explicit operator bool() const { return defect == WalkDefect::kNone; }
};

/// Certificate checker for alternating walks. Never throws; an invalid
/// matching or walk yields a defect.
WalkCheck verify_walk(const Graph& g, const Matching& m, const AlternatingWalk& w);

/// Vertices u joined to `source` by an M-mm-alternating walk.
struct ReachSet {
  Vertex source = 0;
  std::vector<Vertex> members;  // sorted

  bool contains(Vertex u) const;
};

/// Breadth-first search over (vertex, parity-of-last-edge) states, starting
/// from the matched edge source-M(source). O(V + E). Requires M perfect.
ReachSet reachable_set(const Graph& g, const Matching& m, Vertex v);

/// Whether an M-mm-alternating closed walk starts and ends at v.
bool has_mm_closed_walk(const Graph& g, const Matching& m, Vertex v);

/// A shortest M-mm-alternating closed walk at v (at most 4n edges), or none.
std::optional<AlternatingWalk> semi_jposy_witness(const Graph& g,
                                                  const Matching& m, Vertex v);

/// has_mm_closed_walk for every vertex. The default evaluates vertices in
/// parallel; the serial form is the reference implementation.
std::vector<bool> closed_walk_flags(const Graph& g, const Matching& m);
std::vector<bool> closed_walk_flags_serial(const Graph& g, const Matching& m);

}  // namespace sdke
