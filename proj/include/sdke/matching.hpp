#pragma once

#include <cstddef>
#include <vector>

#include "sdke/graph.hpp"

namespace sdke {

/// A matching stored as an involution: partner(v) == v when v is unsaturated.
class Matching {
 public:
  Matching() = default;
  /// Empty matching on n vertices.
  explicit Matching(std::size_t n);
  /// Throws InvalidInput if `pairs` share a vertex or leave [0, n).
  Matching(std::size_t n, const std::vector<Edge>& pairs);

  std::size_t order() const { return mate_.size(); }
  Vertex partner(Vertex v) const { return mate_[v]; }
  bool saturated(Vertex v) const { return mate_[v] != v; }
  bool contains(Edge e) const { return e.u != e.v && mate_[e.u] == e.v; }
  /// Number of matched pairs.
  std::size_t size() const;
  /// Matched pairs in canonical order.
  std::vector<Edge> pairs() const;

  void match(Vertex a, Vertex b);

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Vertex> mate_;
};

/// Throws InvalidInput unless m is a matching of g (same order, pairs are edges).
void require_matching_of(const Graph& g, const Matching& m);

/// Maximum-cardinality matching by augmenting paths with blossom contraction.
/// Deterministic: free vertices and neighbors are scanned in increasing id.
Matching maximum_matching(const Graph& g);

std::size_t matching_number(const Graph& g);

bool is_perfect(const Graph& g, const Matching& m);

bool is_matchable(const Graph& g);

/// Exhaustive enumeration bounds. Counts can explode, so the order bound is
/// checked up front; `max_results` truncates (0 = unlimited).
struct EnumerationLimits {
  std::size_t max_order = 16;
  std::size_t max_results = 0;
};

enum class FamilyKind { kAllPerfect, kAllMaximum };

struct MatchingFamily {
  FamilyKind kind = FamilyKind::kAllPerfect;
  std::vector<Matching> members;
  bool truncated = false;
};

/// All perfect matchings, built by pairing the lowest unmatched vertex with
/// each of its free neighbors in increasing order.
MatchingFamily enumerate_perfect_matchings(const Graph& g,
                                           EnumerationLimits limits = {});

/// All matchings of cardinality matching_number(g).
MatchingFamily enumerate_maximum_matchings(const Graph& g,
                                           EnumerationLimits limits = {});

/// True iff some maximum matching of g avoids e, i.e. mu(G - e) == mu(G).
bool exists_max_matching_avoiding(const Graph& g, Edge e);

}  // namespace sdke
