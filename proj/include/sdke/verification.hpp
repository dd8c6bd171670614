#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdke/decomposition.hpp"
#include "sdke/determinantal.hpp"
#include "sdke/graph.hpp"
#include "sdke/matching.hpp"

namespace sdke {

inline constexpr std::size_t kIndependenceMaxOrder = 30;

/// Exact alpha(G) by branch and bound on bitsets, bounded by a greedy
/// clique cover of the undecided vertices.
std::size_t independence_number(const Graph& g,
                                std::size_t max_order = kIndependenceMaxOrder);

struct KeCheck {
  std::size_t alpha = 0;
  std::size_t mu = 0;
  std::size_t n = 0;
  bool is_ke = false;  // alpha + mu == n
};

KeCheck is_koenig_egervary(const Graph& g,
                           std::size_t max_order = kIndependenceMaxOrder);

/// Data that re-identifies a failure through the public API.
struct Counterexample {
  std::string detail;
  std::optional<Matching> matching = std::nullopt;
  std::optional<Matching> other_matching = std::nullopt;
  std::optional<Vertex> vertex = std::nullopt;
  std::optional<Edge> edge = std::nullopt;
  std::optional<SachsSubgraph> sachs = std::nullopt;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::optional<Counterexample> counterexample;
};

struct TheoremReport {
  std::vector<CheckResult> checks;  // sorted by name
  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

struct SuiteOptions {
  /// Bound for the enumeration-heavy checks (matchings, Sachs subgraphs).
  std::size_t max_order = 12;
  /// Ryser/elimination checks run up to this order.
  std::size_t algebraic_max_order = kPermanentMaxOrder;
};

// Individual theorem checks. Each takes the partition under test explicitly
// so a deliberately wrong partition can be fed in.

/// Reach sets agree across every pair of perfect matchings.
CheckResult check_reachability_invariance(const Graph& g, EnumerationLimits limits);
/// The partition is the same for every perfect matching.
CheckResult check_matching_independence(const Graph& g, const SdKePartition& p,
                                        EnumerationLimits limits);
/// No maximum matching uses a cut edge.
CheckResult check_cut_edges_unmatched(const Graph& g, const SdKePartition& p,
                                      EnumerationLimits limits);
CheckResult check_matching_number_additivity(const Graph& g, const SdKePartition& p);
/// No Sachs subgraph uses a cut edge.
CheckResult check_sachs_cut_disjointness(const Graph& g, const SdKePartition& p,
                                         EnumerationLimits limits);
CheckResult check_det_multiplicativity(const Graph& g, const SdKePartition& p);
CheckResult check_perm_multiplicativity(const Graph& g, const SdKePartition& p,
                                        std::size_t ryser_max_order);
CheckResult check_ke_part_is_ke(const SdKePartition& p);
CheckResult check_sd_part_not_ke(const SdKePartition& p);
/// Connected graphs with an empty KE part have R(M, v) = V(G) for all v.
CheckResult check_full_reachability(const Graph& g, const SdKePartition& p);
/// V_SD(G) within V_SD(G - e) for every KE-part edge, with equality when
/// some maximum matching avoids e.
CheckResult check_deletion_stability(const Graph& g, const SdKePartition& p,
                                     EnumerationLimits limits);
/// Every SD witness is an mm-closed walk at its vertex; every KE marker names
/// a vertex without one.
CheckResult check_certificates(const Graph& g, const SdKePartition& p);

/// Runs every check on a matchable graph. Throws NotMatchable, or
/// LimitExceeded when g.order() > options.max_order.
TheoremReport run_theorem_suite(const Graph& g, SuiteOptions options = {});

/// Planted perfect matching on a random pairing of the vertices, then every
/// other pair independently with probability p. Deterministic per seed.
Graph random_matchable_graph(std::size_t n, double extra_edge_prob,
                             std::uint64_t seed);

/// Erdos-Renyi G(n, p), deterministic per seed.
Graph random_graph(std::size_t n, double edge_prob, std::uint64_t seed);

}  // namespace sdke
