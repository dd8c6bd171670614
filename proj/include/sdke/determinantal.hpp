#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sdke/decomposition.hpp"
#include "sdke/graph.hpp"
#include "sdke/matching.hpp"

namespace sdke {

using BigInt = boost::multiprecision::cpp_int;

struct SachsComponent {
  enum class Kind { kEdge, kCycle };
  Kind kind = Kind::kEdge;
  /// K2: the two endpoints in increasing order. Cycle: starts at its lowest
  /// vertex and continues toward the smaller of that vertex's two neighbors.
  std::vector<Vertex> vertices;

  bool even() const { return vertices.size() % 2 == 0; }
  friend bool operator==(const SachsComponent&, const SachsComponent&) = default;
};

/// Spanning subgraph whose components are all K2 or cycles.
struct SachsSubgraph {
  std::size_t order = 0;
  std::vector<SachsComponent> components;

  /// c(S)
  std::size_t cycle_count() const;
  /// kappa_e(S); every K2 counts as even.
  std::size_t even_component_count() const;
  std::vector<Edge> edges() const;
  bool uses(Edge e) const;

  friend bool operator==(const SachsSubgraph&, const SachsSubgraph&) = default;
};

/// True iff s is a Sachs subgraph of g in canonical form.
bool is_sachs_subgraph_of(const Graph& g, const SachsSubgraph& s);

inline constexpr EnumerationLimits kSachsLimits{20, 0};

/// Visits every Sachs subgraph exactly once, recursing on the lowest
/// uncovered vertex: pair it with a higher neighbor, or close a simple cycle
/// through it. Return false from the visitor to stop early.
/// Throws LimitExceeded when the order exceeds limits.max_order.
void for_each_sachs(const Graph& g,
                    const std::function<bool(const SachsSubgraph&)>& visit,
                    EnumerationLimits limits = kSachsLimits);

/// Collects at most limits.max_results subgraphs (0 = all).
std::vector<SachsSubgraph> enumerate_sachs(const Graph& g,
                                           EnumerationLimits limits = kSachsLimits);

/// Harary's signed and unsigned sums over all Sachs subgraphs.
struct SachsSums {
  BigInt det;       // sum of (-1)^kappa_e(S) 2^c(S)
  BigInt perm;      // sum of 2^c(S)
  std::size_t count = 0;
};

/// OpenMP kernel: top-level branches at vertex 0 are spread over threads.
SachsSums sachs_sums(const Graph& g, EnumerationLimits limits = kSachsLimits);
/// Single-threaded reference.
SachsSums sachs_sums_serial(const Graph& g,
                            EnumerationLimits limits = kSachsLimits);

/// Empty graph (order 0) gives 1; no Sachs subgraph gives 0.
BigInt det_via_sachs(const Graph& g, EnumerationLimits limits = kSachsLimits);
BigInt perm_via_sachs(const Graph& g, EnumerationLimits limits = kSachsLimits);

/// Exact determinant of the 0/1 adjacency matrix by fraction-free
/// (Bareiss) elimination. Order-0 matrix gives 1.
BigInt det_adjacency(const Graph& g);

inline constexpr std::size_t kPermanentMaxOrder = 30;

/// Exact permanent of the adjacency matrix by Ryser's formula in Gray-code
/// order, split into chunks evaluated in parallel.
BigInt perm_adjacency(const Graph& g,
                      std::size_t max_order = kPermanentMaxOrder);
/// Single-threaded Ryser reference.
BigInt perm_adjacency_serial(const Graph& g,
                             std::size_t max_order = kPermanentMaxOrder);

enum class DetMethod { kElimination, kSachs };
enum class PermMethod { kRyser, kSachs };

std::string_view to_string(DetMethod m);
std::string_view to_string(PermMethod m);

BigInt determinant(const Graph& g, DetMethod method,
                   EnumerationLimits sachs_limits = kSachsLimits);
BigInt permanent(const Graph& g, PermMethod method,
                 EnumerationLimits sachs_limits = kSachsLimits,
                 std::size_t ryser_max_order = kPermanentMaxOrder);

struct FactorizationOptions {
  DetMethod det_method = DetMethod::kElimination;
  PermMethod perm_method = PermMethod::kRyser;
  bool permanents = true;
  EnumerationLimits sachs_limits = kSachsLimits;
  std::size_t ryser_max_order = kPermanentMaxOrder;
};

/// det(G) against det(SD) det(KE), and likewise for perm. An empty side
/// contributes the factor 1.
struct FactorizationReport {
  BigInt det_g, det_sd, det_ke;
  bool det_product_ok = false;
  std::optional<BigInt> perm_g, perm_sd, perm_ke;
  bool perm_product_ok = false;  // vacuously true when permanents are skipped
  std::size_t cut_size = 0;
  DetMethod det_method = DetMethod::kElimination;
  std::optional<PermMethod> perm_method;
};

FactorizationReport factorization_report(const Graph& g,
                                         FactorizationOptions options = {});
/// Same, reusing an already computed partition of g.
FactorizationReport factorization_report(const Graph& g,
                                         const SdKePartition& partition,
                                         FactorizationOptions options = {});

struct CutDisjointness {
  bool ok = true;
  std::size_t subgraphs_checked = 0;
  std::optional<SachsSubgraph> offending;
  std::optional<Edge> edge;
};

/// Scans every Sachs subgraph for an edge of `cut`.
CutDisjointness sachs_cut_disjointness(const Graph& g,
                                       const std::vector<Edge>& cut,
                                       EnumerationLimits limits = kSachsLimits);
/// Uses the SD-KE cut of g. Throws NotMatchable.
CutDisjointness sachs_cut_disjointness(const Graph& g,
                                       EnumerationLimits limits = kSachsLimits);

}  // namespace sdke
