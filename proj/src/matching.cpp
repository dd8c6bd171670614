#include "sdke/matching.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "sdke/error.hpp"

namespace sdke {

Matching::Matching(std::size_t n) : mate_(n) {
  for (std::size_t v = 0; v < n; ++v) mate_[v] = static_cast<Vertex>(v);
}

Matching::Matching(std::size_t n, const std::vector<Edge>& pairs)
    : Matching(n) {
  for (const Edge& e : pairs) {
    if (e.v >= n || e.u == e.v) {
      throw InvalidInput("matched pair " + std::to_string(e.u) + " " +
                         std::to_string(e.v) + " is not a valid edge");
    }
    if (saturated(e.u) || saturated(e.v)) {
      throw InvalidInput("vertex used by two matched pairs near " +
                         std::to_string(e.u) + " " + std::to_string(e.v));
    }
    match(e.u, e.v);
  }
}

std::size_t Matching::size() const {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < mate_.size(); ++v) twice += (mate_[v] != v);
  return twice / 2;
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < mate_.size(); ++v) {
    if (mate_[v] > v) out.emplace_back(v, mate_[v]);
  }
  return out;
}

void Matching::match(Vertex a, Vertex b) {
  mate_[a] = b;
  mate_[b] = a;
}

void require_matching_of(const Graph& g, const Matching& m) {
  if (m.order() != g.order()) {
    throw InvalidInput("matching order " + std::to_string(m.order()) +
                       " differs from graph order " +
                       std::to_string(g.order()));
  }
  for (Vertex v = 0; v < m.order(); ++v) {
    const Vertex w = m.partner(v);
    if (w >= m.order() || m.partner(w) != v) {
      throw InvalidInput("matching is not an involution at vertex " +
                         std::to_string(v));
    }
    if (w != v && !g.adjacent(v, w)) {
      throw InvalidInput("matched pair " + std::to_string(v) + " " +
                         std::to_string(w) + " is not an edge");
    }
  }
}

namespace {

// Edmonds' blossom algorithm, BFS flavor with explicit base/parent arrays.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.order()),
        mate_(n_, kNone),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_) {}

  Matching run() {
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != kNone) continue;
      Vertex end = find_augmenting_path(root);
      while (end != kNone) {
        const Vertex pv = parent_[end];
        const Vertex next = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = next;
      }
    }
    Matching m(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != kNone && v < mate_[v]) m.match(v, mate_[v]);
    }
    return m;
  }

 private:
  static constexpr Vertex kNone = ~Vertex{0};

  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;
    used_[root] = true;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          const Vertex cur = lowest_common_ancestor(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          used_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
};

void require_enumerable(const Graph& g, const EnumerationLimits& limits) {
  if (g.order() > limits.max_order) {
    throw LimitExceeded("matching enumeration limited to " +
                        std::to_string(limits.max_order) +
                        " vertices; graph has " + std::to_string(g.order()));
  }
}

}  // namespace

Matching maximum_matching(const Graph& g) { return BlossomMatcher(g).run(); }

std::size_t matching_number(const Graph& g) { return maximum_matching(g).size(); }

bool is_perfect(const Graph& g, const Matching& m) {
  require_matching_of(g, m);
  for (Vertex v = 0; v < m.order(); ++v) {
    if (!m.saturated(v)) return false;
  }
  return true;
}

bool is_matchable(const Graph& g) {
  return g.order() % 2 == 0 && 2 * matching_number(g) == g.order();
}

MatchingFamily enumerate_perfect_matchings(const Graph& g,
                                           EnumerationLimits limits) {
  require_enumerable(g, limits);
  MatchingFamily family{FamilyKind::kAllPerfect, {}, false};
  if (g.order() % 2 != 0) return family;

  Matching current(g.order());
  std::function<bool(Vertex)> extend = [&](Vertex from) -> bool {
    Vertex v = from;
    while (v < g.order() && current.saturated(v)) ++v;
    if (v == g.order()) {
      if (limits.max_results != 0 &&
          family.members.size() == limits.max_results) {
        family.truncated = true;
        return false;
      }
      family.members.push_back(current);
      return true;
    }
    for (Vertex w : g.neighbors(v)) {
      if (w < v || current.saturated(w)) continue;
      current.match(v, w);
      const bool go_on = extend(v + 1);
      current.match(v, v);
      current.match(w, w);
      if (!go_on) return false;
    }
    return true;
  };
  extend(0);
  return family;
}

MatchingFamily enumerate_maximum_matchings(const Graph& g,
                                           EnumerationLimits limits) {
  require_enumerable(g, limits);
  MatchingFamily family{FamilyKind::kAllMaximum, {}, false};
  const std::size_t target = matching_number(g);
  const std::size_t n = g.order();

  Matching current(n);
  // Each vertex, in increasing order, is either left free or paired with a
  // higher free neighbor. Prune when the remaining vertices cannot supply
  // enough pairs to reach the target cardinality.
  std::function<bool(Vertex, std::size_t)> extend =
      [&](Vertex v, std::size_t pairs) -> bool {
    while (v < n && current.saturated(v)) ++v;
    if (pairs == target) {
      if (limits.max_results != 0 &&
          family.members.size() == limits.max_results) {
        family.truncated = true;
        return false;
      }
      family.members.push_back(current);
      return true;
    }
    if (v >= n) return true;
    std::size_t free_left = 0;
    for (Vertex u = v; u < n; ++u) free_left += !current.saturated(u);
    if (pairs + free_left / 2 < target) return true;

    for (Vertex w : g.neighbors(v)) {
      if (w < v || current.saturated(w)) continue;
      current.match(v, w);
      const bool go_on = extend(v + 1, pairs + 1);
      current.match(v, v);
      current.match(w, w);
      if (!go_on) return false;
    }
    return extend(v + 1, pairs);
  };
  extend(0, 0);
  return family;
}

bool exists_max_matching_avoiding(const Graph& g, Edge e) {
  const Graph without = delete_edge(g, e);
  return matching_number(without) == matching_number(g);
}

}  // namespace sdke
