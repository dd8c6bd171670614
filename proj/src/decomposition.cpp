#include "sdke/decomposition.hpp"

#include <algorithm>
#include <string>

#include "sdke/error.hpp"

namespace sdke {

bool SdKePartition::is_sd(Vertex v) const {
  return std::binary_search(sd_vertices.begin(), sd_vertices.end(), v);
}

SdKePartition sd_ke_partition(const Graph& g, const Matching& m) {
  require_matching_of(g, m);
  if (!is_perfect(g, m)) {
    throw NotMatchable("SD-KE partition needs a perfect matching");
  }
  const std::vector<bool> flags = closed_walk_flags(g, m);

  SdKePartition p;
  p.matching = m;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex w = m.partner(v);
    if (flags[v] && flags[w]) {
      p.sd_vertices.push_back(v);
    } else {
      p.ke_vertices.push_back(v);
      p.ke_markers.push_back({v, flags[v] ? w : v});
    }
  }
  for (Vertex v : p.sd_vertices) {
    p.witnesses.push_back(*semi_jposy_witness(g, m, v));
  }
  p.sd_part = induced_subgraph(g, p.sd_vertices);
  p.ke_part = induced_subgraph(g, p.ke_vertices);
  for (const Edge& e : g.edges()) {
    if (p.is_sd(e.u) != p.is_sd(e.v)) p.cut.push_back(e);
  }
  return p;
}

std::vector<Vertex> ke_vertices_by_visit_order(const Graph& g,
                                               const Matching& m,
                                               std::span<const Vertex> order) {
  if (!is_perfect(g, m)) {
    throw NotMatchable("SD-KE partition needs a perfect matching");
  }
  std::vector<bool> listed(g.order(), false);
  for (Vertex v : order) {
    if (!g.contains(v) || listed[v]) {
      throw InvalidInput("visit order is not a permutation of the vertices");
    }
    listed[v] = true;
  }
  if (order.size() != g.order()) {
    throw InvalidInput("visit order is not a permutation of the vertices");
  }

  std::vector<bool> remaining(g.order(), true);
  std::vector<Vertex> ke;
  for (Vertex v : order) {
    if (!remaining[v]) continue;
    remaining[v] = false;
    if (!has_mm_closed_walk(g, m, v)) {
      const Vertex w = m.partner(v);
      remaining[w] = false;
      ke.push_back(v);
      ke.push_back(w);
    }
  }
  std::sort(ke.begin(), ke.end());
  ke.erase(std::unique(ke.begin(), ke.end()), ke.end());
  return ke;
}

SdKePartition sd_ke_partition(const Graph& g) {
  Matching m = maximum_matching(g);
  if (2 * m.size() != g.order()) throw NotMatchable();
  return sd_ke_partition(g, m);
}

Subgraph sd_part(const Graph& g) { return sd_ke_partition(g).sd_part; }
Subgraph ke_part(const Graph& g) { return sd_ke_partition(g).ke_part; }
std::vector<Edge> sd_ke_cut(const Graph& g) { return sd_ke_partition(g).cut; }

std::vector<Vertex> sd_vertices_general(const Graph& g,
                                        EnumerationLimits limits) {
  if (is_matchable(g)) return sd_ke_partition(g).sd_vertices;

  const std::size_t n = g.order();
  std::vector<bool> sd(n, false);
  limits.max_results = 0;
  const MatchingFamily family = enumerate_maximum_matchings(g, limits);

  // The SD set only depends on which vertices are left free, so matchings
  // sharing a free set are skipped after the first.
  std::vector<std::vector<Vertex>> done;
  for (const Matching& m : family.members) {
    std::vector<Vertex> free;
    for (Vertex v = 0; v < n; ++v) {
      if (!m.saturated(v)) free.push_back(v);
    }
    if (std::find(done.begin(), done.end(), free) != done.end()) continue;
    done.push_back(free);

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    std::vector<Edge> pairs = m.pairs();
    auto next = static_cast<Vertex>(n);
    for (Vertex x : free) {
      const Vertex y = next++, a = next++, b = next++;
      edges.insert(edges.end(), {{x, y}, {y, a}, {y, b}, {a, b}});
      pairs.emplace_back(x, y);
      pairs.emplace_back(a, b);
    }
    const Graph augmented(next, edges);
    const Matching perfect(next, pairs);
    for (Vertex v : sd_ke_partition(augmented, perfect).sd_vertices) {
      if (v < n) sd[v] = true;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (sd[v]) out.push_back(v);
  }
  return out;
}

StabilityReport check_stability_under_deletion(const Graph& g, Edge e,
                                               EnumerationLimits limits) {
  if (!g.has_edge(e)) {
    throw InvalidInput("edge " + std::to_string(e.u) + " " +
                       std::to_string(e.v) + " is not in the graph");
  }
  StabilityReport r;
  r.edge = e;
  r.sd_before = sd_vertices_general(g, limits);
  const auto on_sd = [&](Vertex v) {
    return std::binary_search(r.sd_before.begin(), r.sd_before.end(), v);
  };
  if (on_sd(e.u) || on_sd(e.v)) {
    throw InvalidInput("edge " + std::to_string(e.u) + " " +
                       std::to_string(e.v) + " is not inside the KE part");
  }
  r.avoidable = exists_max_matching_avoiding(g, e);
  r.sd_after = sd_vertices_general(delete_edge(g, e), limits);
  r.inclusion_holds = std::includes(r.sd_after.begin(), r.sd_after.end(),
                                    r.sd_before.begin(), r.sd_before.end());
  r.equality_holds = r.sd_before == r.sd_after;
  r.consistent = r.inclusion_holds && (!r.avoidable || r.equality_holds);
  return r;
}

}  // namespace sdke
