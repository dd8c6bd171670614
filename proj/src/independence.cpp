#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "sdke/error.hpp"
#include "sdke/verification.hpp"

namespace sdke {

namespace {

using Mask = std::uint64_t;

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : neighbors_(g.order(), 0) {
    for (const Edge& e : g.edges()) {
      neighbors_[e.u] |= Mask{1} << e.v;
      neighbors_[e.v] |= Mask{1} << e.u;
    }
  }

  std::size_t solve(Mask all) {
    best_ = 0;
    branch(all, 0);
    return best_;
  }

 private:
  // Upper bound: a greedy partition of the candidates into cliques; an
  // independent set takes at most one vertex per clique.
  std::size_t clique_cover_bound(Mask candidates) const {
    std::size_t cliques = 0;
    while (candidates != 0) {
      const int v = std::countr_zero(candidates);
      Mask clique = Mask{1} << v;
      Mask extend = candidates & neighbors_[v];
      while (extend != 0) {
        const int w = std::countr_zero(extend);
        clique |= Mask{1} << w;
        extend &= neighbors_[w];
      }
      candidates &= ~clique;
      ++cliques;
    }
    return cliques;
  }

  void branch(Mask candidates, std::size_t chosen) {
    // Vertices isolated among the candidates belong to some maximum set.
    for (Mask scan = candidates; scan != 0; scan &= scan - 1) {
      const int v = std::countr_zero(scan);
      if ((neighbors_[v] & candidates) == 0) {
        candidates &= ~(Mask{1} << v);
        ++chosen;
      }
    }
    if (candidates == 0) {
      if (chosen > best_) best_ = chosen;
      return;
    }
    if (chosen + clique_cover_bound(candidates) <= best_) return;

    int pick = -1;
    int pick_degree = -1;
    for (Mask scan = candidates; scan != 0; scan &= scan - 1) {
      const int v = std::countr_zero(scan);
      const int d = std::popcount(neighbors_[v] & candidates);
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    const Mask bit = Mask{1} << pick;
    branch(candidates & ~bit & ~neighbors_[pick], chosen + 1);
    branch(candidates & ~bit, chosen);
  }

  std::vector<Mask> neighbors_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t independence_number(const Graph& g, std::size_t max_order) {
  if (g.order() > max_order || g.order() > 64) {
    throw LimitExceeded("independence number limited to " +
                        std::to_string(max_order) + " vertices; graph has " +
                        std::to_string(g.order()));
  }
  if (g.order() == 0) return 0;
  const Mask all = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
  return IndependentSetSearch(g).solve(all);
}

KeCheck is_koenig_egervary(const Graph& g, std::size_t max_order) {
  KeCheck k;
  k.n = g.order();
  k.alpha = independence_number(g, max_order);
  k.mu = matching_number(g);
  k.is_ke = k.alpha + k.mu == k.n;
  return k;
}

}  // namespace sdke
