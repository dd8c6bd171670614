#include "sdke/determinantal.hpp"

#include <utility>
#include <vector>

#include "sdke/error.hpp"

namespace sdke {

std::string_view to_string(DetMethod m) {
  return m == DetMethod::kElimination ? "elimination" : "sachs";
}

std::string_view to_string(PermMethod m) {
  return m == PermMethod::kRyser ? "ryser" : "sachs";
}

BigInt det_adjacency(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
  for (const Edge& e : g.edges()) {
    a[e.u][e.v] = 1;
    a[e.v][e.u] = 1;
  }
  BigInt previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact division: Sylvester's identity guarantees divisibility.
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  return negate ? BigInt(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

BigInt determinant(const Graph& g, DetMethod method,
                   EnumerationLimits sachs_limits) {
  return method == DetMethod::kElimination ? det_adjacency(g)
                                           : det_via_sachs(g, sachs_limits);
}

BigInt permanent(const Graph& g, PermMethod method,
                 EnumerationLimits sachs_limits, std::size_t ryser_max_order) {
  return method == PermMethod::kRyser ? perm_adjacency(g, ryser_max_order)
                                      : perm_via_sachs(g, sachs_limits);
}

FactorizationReport factorization_report(const Graph& g,
                                         const SdKePartition& partition,
                                         FactorizationOptions options) {
  FactorizationReport r;
  r.det_method = options.det_method;
  r.cut_size = partition.cut.size();
  const Graph& sd = partition.sd_part.graph;
  const Graph& ke = partition.ke_part.graph;

  r.det_g = determinant(g, options.det_method, options.sachs_limits);
  r.det_sd = determinant(sd, options.det_method, options.sachs_limits);
  r.det_ke = determinant(ke, options.det_method, options.sachs_limits);
  r.det_product_ok = r.det_g == r.det_sd * r.det_ke;

  r.perm_product_ok = true;
  if (options.permanents) {
    r.perm_method = options.perm_method;
    auto perm = [&](const Graph& h) {
      return permanent(h, options.perm_method, options.sachs_limits,
                       options.ryser_max_order);
    };
    r.perm_g = perm(g);
    r.perm_sd = perm(sd);
    r.perm_ke = perm(ke);
    r.perm_product_ok = *r.perm_g == *r.perm_sd * *r.perm_ke;
  }
  return r;
}

FactorizationReport factorization_report(const Graph& g,
                                         FactorizationOptions options) {
  return factorization_report(g, sd_ke_partition(g), options);
}

CutDisjointness sachs_cut_disjointness(const Graph& g,
                                       const std::vector<Edge>& cut,
                                       EnumerationLimits limits) {
  CutDisjointness out;
  limits.max_results = 0;
  for_each_sachs(
      g,
      [&](const SachsSubgraph& s) {
        ++out.subgraphs_checked;
        for (const Edge& e : cut) {
          if (s.uses(e)) {
            out.ok = false;
            out.offending = s;
            out.edge = e;
            return false;
          }
        }
        return true;
      },
      limits);
  return out;
}

CutDisjointness sachs_cut_disjointness(const Graph& g,
                                       EnumerationLimits limits) {
  return sachs_cut_disjointness(g, sd_ke_partition(g).cut, limits);
}

}  // namespace sdke
