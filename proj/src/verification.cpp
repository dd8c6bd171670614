#include "sdke/verification.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

#include "sdke/alternating.hpp"
#include "sdke/error.hpp"

namespace sdke {

namespace {

CheckResult pass(std::string name) { return {std::move(name), true, std::nullopt}; }

CheckResult fail(std::string name, Counterexample c) {
  return {std::move(name), false, std::move(c)};
}

std::string big(const BigInt& x) { return x.str(); }

Edge host_edge(const Subgraph& s, const Edge& e) {
  return {s.to_host[e.u], s.to_host[e.v]};
}

}  // namespace

bool TheoremReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* TheoremReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CheckResult check_reachability_invariance(const Graph& g,
                                          EnumerationLimits limits) {
  const std::string name = "reachability-invariance";
  const MatchingFamily family = enumerate_perfect_matchings(g, limits);
  if (family.members.empty()) return pass(name);
  const Matching& first = family.members.front();
  std::vector<ReachSet> reference;
  for (Vertex v = 0; v < g.order(); ++v) {
    reference.push_back(reachable_set(g, first, v));
  }
  for (const Matching& m : family.members) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (reachable_set(g, m, v).members != reference[v].members) {
        return fail(name, {"reach set of vertex differs between matchings",
                           first, m, v, std::nullopt, std::nullopt});
      }
    }
  }
  return pass(name);
}

CheckResult check_matching_independence(const Graph& g, const SdKePartition& p,
                                        EnumerationLimits limits) {
  const std::string name = "matching-independence";
  for (const Matching& m : enumerate_perfect_matchings(g, limits).members) {
    if (sd_ke_partition(g, m).sd_vertices != p.sd_vertices) {
      return fail(name, {"SD set changes with the perfect matching", m,
                         std::nullopt, std::nullopt, std::nullopt, std::nullopt});
    }
  }
  return pass(name);
}

CheckResult check_cut_edges_unmatched(const Graph& g, const SdKePartition& p,
                                      EnumerationLimits limits) {
  const std::string name = "cut-edges-unmatched";
  if (p.cut.empty()) return pass(name);
  for (const Matching& m : enumerate_maximum_matchings(g, limits).members) {
    for (const Edge& e : p.cut) {
      if (m.contains(e)) {
        return fail(name, {"maximum matching uses an SD-KE cut edge", m,
                           std::nullopt, std::nullopt, e, std::nullopt});
      }
    }
  }
  return pass(name);
}

CheckResult check_matching_number_additivity(const Graph& g,
                                             const SdKePartition& p) {
  const std::string name = "matching-number-additivity";
  const std::size_t whole = matching_number(g);
  const std::size_t sd = matching_number(p.sd_part.graph);
  const std::size_t ke = matching_number(p.ke_part.graph);
  if (whole == sd + ke) return pass(name);
  std::ostringstream out;
  out << "mu(G) = " << whole << " but mu(SD) + mu(KE) = " << sd << " + " << ke;
  return fail(name, {out.str()});
}

CheckResult check_sachs_cut_disjointness(const Graph& g, const SdKePartition& p,
                                         EnumerationLimits limits) {
  const std::string name = "sachs-cut-disjointness";
  const CutDisjointness result = sachs_cut_disjointness(g, p.cut, limits);
  if (result.ok) return pass(name);
  return fail(name, {"Sachs subgraph uses an SD-KE cut edge", std::nullopt,
                     std::nullopt, std::nullopt, result.edge, result.offending});
}

CheckResult check_det_multiplicativity(const Graph& g, const SdKePartition& p) {
  const std::string name = "det-multiplicativity";
  const BigInt whole = det_adjacency(g);
  const BigInt sd = det_adjacency(p.sd_part.graph);
  const BigInt ke = det_adjacency(p.ke_part.graph);
  if (whole == sd * ke) return pass(name);
  return fail(name, {"det(G) = " + big(whole) + " but det(SD) det(KE) = " +
                     big(sd) + " * " + big(ke)});
}

CheckResult check_perm_multiplicativity(const Graph& g, const SdKePartition& p,
                                        std::size_t ryser_max_order) {
  const std::string name = "perm-multiplicativity";
  const BigInt whole = perm_adjacency(g, ryser_max_order);
  const BigInt sd = perm_adjacency(p.sd_part.graph, ryser_max_order);
  const BigInt ke = perm_adjacency(p.ke_part.graph, ryser_max_order);
  if (whole == sd * ke) return pass(name);
  return fail(name, {"perm(G) = " + big(whole) + " but perm(SD) perm(KE) = " +
                     big(sd) + " * " + big(ke)});
}

CheckResult check_ke_part_is_ke(const SdKePartition& p) {
  const std::string name = "ke-part-koenig-egervary";
  const KeCheck k = is_koenig_egervary(p.ke_part.graph);
  if (k.is_ke) return pass(name);
  std::ostringstream out;
  out << "KE part has alpha + mu = " << k.alpha << " + " << k.mu
      << " != " << k.n;
  return fail(name, {out.str()});
}

CheckResult check_sd_part_not_ke(const SdKePartition& p) {
  const std::string name = "sd-part-not-koenig-egervary";
  if (p.sd_vertices.empty()) return pass(name);
  const KeCheck k = is_koenig_egervary(p.sd_part.graph);
  if (!k.is_ke) return pass(name);
  std::ostringstream out;
  out << "nonempty SD part has alpha + mu = " << k.alpha << " + " << k.mu
      << " = " << k.n;
  return fail(name, {out.str()});
}

CheckResult check_full_reachability(const Graph& g, const SdKePartition& p) {
  const std::string name = "full-reachability";
  if (!p.ke_vertices.empty() || connected_components(g).size() > 1) {
    return pass(name);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (reachable_set(g, p.matching, v).members.size() != g.order()) {
      return fail(name, {"empty KE part but R(M, v) != V(G)", p.matching,
                         std::nullopt, v, std::nullopt, std::nullopt});
    }
  }
  return pass(name);
}

CheckResult check_deletion_stability(const Graph& g, const SdKePartition& p,
                                     EnumerationLimits limits) {
  const std::string name = "deletion-stability";
  for (const Edge& local : p.ke_part.graph.edges()) {
    const Edge e = host_edge(p.ke_part, local);
    try {
      const StabilityReport r = check_stability_under_deletion(g, e, limits);
      if (!r.consistent) {
        return fail(name, {r.avoidable
                               ? "V_SD changes after deleting an avoidable KE edge"
                               : "V_SD shrinks after deleting a KE edge",
                           std::nullopt, std::nullopt, std::nullopt, e,
                           std::nullopt});
      }
    } catch (const InvalidInput&) {
      return fail(name, {"edge of the reported KE part is not a KE edge",
                         std::nullopt, std::nullopt, std::nullopt, e,
                         std::nullopt});
    }
  }
  return pass(name);
}

CheckResult check_certificates(const Graph& g, const SdKePartition& p) {
  const std::string name = "certificates";
  if (p.witnesses.size() != p.sd_vertices.size() ||
      p.ke_markers.size() != p.ke_vertices.size()) {
    return fail(name, {"certificate count does not match the partition"});
  }
  for (std::size_t i = 0; i < p.sd_vertices.size(); ++i) {
    const Vertex v = p.sd_vertices[i];
    const AlternatingWalk& w = p.witnesses[i];
    if (!verify_walk(g, p.matching, w) || w.kind != WalkKind::kMM ||
        !w.closed() || w.vertices.front() != v) {
      return fail(name, {"SD vertex lacks a valid mm-closed witness",
                         p.matching, std::nullopt, v, std::nullopt,
                         std::nullopt});
    }
  }
  for (const KeMarker& k : p.ke_markers) {
    const bool names_pair = k.failed_search == k.vertex ||
                            k.failed_search == p.matching.partner(k.vertex);
    if (!names_pair || has_mm_closed_walk(g, p.matching, k.failed_search)) {
      return fail(name, {"KE vertex marker does not name a failed search",
                         p.matching, std::nullopt, k.vertex, std::nullopt,
                         std::nullopt});
    }
  }
  return pass(name);
}

TheoremReport run_theorem_suite(const Graph& g, SuiteOptions options) {
  if (g.order() > options.max_order) {
    throw LimitExceeded("theorem suite limited to " +
                        std::to_string(options.max_order) +
                        " vertices; graph has " + std::to_string(g.order()));
  }
  const SdKePartition p = sd_ke_partition(g);  // throws NotMatchable
  const EnumerationLimits limits{options.max_order, 0};
  const std::size_t ryser = options.algebraic_max_order;

  const std::vector<std::function<CheckResult()>> checks = {
      [&] { return check_reachability_invariance(g, limits); },
      [&] { return check_matching_independence(g, p, limits); },
      [&] { return check_cut_edges_unmatched(g, p, limits); },
      [&] { return check_matching_number_additivity(g, p); },
      [&] { return check_sachs_cut_disjointness(g, p, limits); },
      [&] { return check_det_multiplicativity(g, p); },
      [&] { return check_perm_multiplicativity(g, p, ryser); },
      [&] { return check_ke_part_is_ke(p); },
      [&] { return check_sd_part_not_ke(p); },
      [&] { return check_full_reachability(g, p); },
      [&] { return check_deletion_stability(g, p, limits); },
      [&] { return check_certificates(g, p); },
  };
  TheoremReport report;
  report.checks.resize(checks.size());
  const auto count = static_cast<std::ptrdiff_t>(checks.size());
  std::vector<std::exception_ptr> errors(checks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      report.checks[i] = checks[i]();
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

}  // namespace sdke
