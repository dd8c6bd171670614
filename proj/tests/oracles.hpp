#pragma once

// Brute-force reference computations for small graphs. Nothing here calls the
// algorithms it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "sdke/determinantal.hpp"
#include "sdke/graph.hpp"
#include "sdke/matching.hpp"

namespace sdke::oracle {

/// Largest matching by trying every way of leaving or pairing each vertex.
inline std::size_t max_matching_size(const Graph& g) {
  std::vector<bool> used(g.order(), false);
  std::function<std::size_t(Vertex)> best = [&](Vertex v) -> std::size_t {
    while (v < g.order() && used[v]) ++v;
    if (v >= g.order()) return 0;
    std::size_t result = best(v + 1);
    used[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = true;
      result = std::max(result, 1 + best(v + 1));
      used[w] = false;
    }
    used[v] = false;
    return result;
  };
  return best(0);
}

/// Every matching as an edge subset, by scanning all subsets of E (m <= 24).
inline std::vector<std::vector<Edge>> all_matchings_by_subsets(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<std::vector<Edge>> out;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<int> deg(g.order(), 0);
    std::vector<Edge> chosen;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if ((mask >> i) & 1u) {
        ok = ++deg[edges[i].u] == 1 && ++deg[edges[i].v] == 1;
        chosen.push_back(edges[i]);
      }
    }
    if (ok) out.push_back(chosen);
  }
  return out;
}

/// alpha(G) over all 2^n vertex subsets.
inline std::size_t alpha_by_subsets(const Graph& g) {
  std::size_t best = 0;
  const std::size_t n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const Edge& e : g.edges()) {
      if (((mask >> e.u) & 1u) && ((mask >> e.v) & 1u)) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

/// Leibniz expansion of det and perm over all n! permutations.
struct Expansion {
  BigInt det = 0;
  BigInt perm = 0;
};

inline Expansion expand_over_permutations(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Expansion out;
  do {
    bool term = true;
    for (std::size_t i = 0; i < n && term; ++i) {
      term = g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(p[i]));
    }
    if (!term) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    }
    out.det += inversions % 2 == 0 ? 1 : -1;
    out.perm += 1;
  } while (std::next_permutation(p.begin(), p.end()));
  if (n == 0) out = {1, 1};
  return out;
}

/// Harary sums by scanning every edge subset for spanning K2/cycle covers.
struct SubsetSachs {
  BigInt det = 0;
  BigInt perm = 0;
  std::size_t count = 0;
};

inline SubsetSachs sachs_by_edge_subsets(const Graph& g) {
  const auto& edges = g.edges();
  const std::size_t n = g.order();
  SubsetSachs out;
  if (n == 0) return {1, 1, 1};
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<std::vector<Vertex>> adj(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((mask >> i) & 1u) {
        adj[edges[i].u].push_back(edges[i].v);
        adj[edges[i].v].push_back(edges[i].u);
      }
    }
    bool ok = true;
    for (const auto& a : adj) ok = ok && (a.size() == 1 || a.size() == 2);
    if (!ok) continue;
    std::vector<bool> seen(n, false);
    std::size_t cycles = 0, even = 0;
    for (Vertex s = 0; s < n && ok; ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> comp{s};
      seen[s] = true;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (Vertex w : adj[comp[i]]) {
          if (!seen[w]) {
            seen[w] = true;
            comp.push_back(w);
          }
        }
      }
      const bool all_deg2 = std::all_of(comp.begin(), comp.end(),
                                        [&](Vertex v) { return adj[v].size() == 2; });
      if (all_deg2) {
        ++cycles;
      } else if (comp.size() != 2) {
        ok = false;  // a path on three or more vertices
      }
      even += comp.size() % 2 == 0;
    }
    if (!ok) continue;
    ++out.count;
    const BigInt weight = BigInt(1) << cycles;
    out.perm += weight;
    out.det += even % 2 == 0 ? weight : BigInt(-weight);
  }
  return out;
}

/// Vertices u such that some M-mm-alternating walk of at most `max_edges`
/// edges runs from v to u, found by explicit walk enumeration.
inline std::set<Vertex> mm_walk_ends(const Graph& g, const Matching& m, Vertex v,
                                     std::size_t max_edges) {
  std::set<Vertex> ends;
  std::function<void(Vertex, bool, std::size_t)> walk =
      [&](Vertex at, bool last_matched, std::size_t used) {
        if (last_matched) ends.insert(at);
        if (used == max_edges) return;
        if (last_matched) {
          for (Vertex w : g.neighbors(at)) {
            if (m.partner(at) != w) walk(w, false, used + 1);
          }
        } else if (m.saturated(at)) {
          walk(m.partner(at), true, used + 1);
        }
      };
  walk(m.partner(v), true, 1);
  return ends;
}

/// Length of the shortest mm-alternating closed walk at v with at most
/// `max_edges` edges, or 0 if there is none. Iterative deepening.
inline std::size_t shortest_mm_closed_walk(const Graph& g, const Matching& m,
                                           Vertex v, std::size_t max_edges) {
  for (std::size_t limit = 1; limit <= max_edges; ++limit) {
    bool found = false;
    std::function<void(Vertex, bool, std::size_t)> walk =
        [&](Vertex at, bool last_matched, std::size_t used) {
          if (found) return;
          if (used == limit) {
            found = last_matched && at == v;
            return;
          }
          if (last_matched) {
            for (Vertex w : g.neighbors(at)) {
              if (m.partner(at) != w) walk(w, false, used + 1);
            }
          } else {
            walk(m.partner(at), true, used + 1);
          }
        };
    walk(m.partner(v), true, 1);
    if (found) return limit;
  }
  return 0;
}

}  // namespace sdke::oracle
