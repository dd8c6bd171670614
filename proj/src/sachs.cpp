#include <algorithm>
#include <array>
#include <string>

#include "sdke/determinantal.hpp"
#include "sdke/error.hpp"

namespace sdke {

std::size_t SachsSubgraph::cycle_count() const {
  return static_cast<std::size_t>(std::count_if(
      components.begin(), components.end(),
      [](const SachsComponent& c) { return c.kind == SachsComponent::Kind::kCycle; }));
}

std::size_t SachsSubgraph::even_component_count() const {
  return static_cast<std::size_t>(std::count_if(
      components.begin(), components.end(),
      [](const SachsComponent& c) { return c.even(); }));
}

std::vector<Edge> SachsSubgraph::edges() const {
  std::vector<Edge> out;
  for (const auto& c : components) {
    if (c.kind == SachsComponent::Kind::kEdge) {
      out.emplace_back(c.vertices[0], c.vertices[1]);
      continue;
    }
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      out.emplace_back(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SachsSubgraph::uses(Edge e) const {
  const auto all = edges();
  return std::binary_search(all.begin(), all.end(), e);
}

bool is_sachs_subgraph_of(const Graph& g, const SachsSubgraph& s) {
  if (s.order != g.order()) return false;
  std::vector<int> cover(g.order(), 0);
  for (const auto& c : s.components) {
    const auto& vs = c.vertices;
    for (Vertex v : vs) {
      if (!g.contains(v) || cover[v]++ != 0) return false;
    }
    if (c.kind == SachsComponent::Kind::kEdge) {
      if (vs.size() != 2 || vs[0] >= vs[1] || !g.adjacent(vs[0], vs[1])) {
        return false;
      }
      continue;
    }
    if (vs.size() < 3) return false;
    if (*std::min_element(vs.begin(), vs.end()) != vs.front()) return false;
    if (vs[1] > vs.back()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!g.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
    }
  }
  return std::all_of(cover.begin(), cover.end(), [](int k) { return k == 1; });
}

namespace {

void require_sachs_bound(const Graph& g, const EnumerationLimits& limits) {
  if (g.order() > limits.max_order) {
    throw LimitExceeded("Sachs enumeration limited to " +
                        std::to_string(limits.max_order) +
                        " vertices; graph has " + std::to_string(g.order()));
  }
}

// Depth-first enumeration over the lowest uncovered vertex.
class SachsWalker {
 public:
  explicit SachsWalker(const Graph& g) : g_(g), covered_(g.order(), false) {}

  // Components containing u built from uncovered vertices. Every uncovered
  // vertex is above u, so K2 partners and cycle vertices are all higher.
  std::vector<SachsComponent> components_through(Vertex u) {
    std::vector<SachsComponent> out;
    for (Vertex w : g_.neighbors(u)) {
      if (!covered_[w]) out.push_back({SachsComponent::Kind::kEdge, {u, w}});
    }
    covered_[u] = true;
    path_.assign(1, u);
    for (Vertex a : g_.neighbors(u)) {
      if (covered_[a]) continue;
      covered_[a] = true;
      path_.push_back(a);
      grow_cycles(u, out);
      path_.pop_back();
      covered_[a] = false;
    }
    covered_[u] = false;
    return out;
  }

  void apply(const SachsComponent& c, bool on) {
    for (Vertex v : c.vertices) covered_[v] = on;
    if (on) {
      stack_.push_back(c);
    } else {
      stack_.pop_back();
    }
  }

  // Returns false when the visitor asked to stop.
  template <class Visit>
  bool recurse(Vertex from, Visit& visit) {
    Vertex u = from;
    while (u < g_.order() && covered_[u]) ++u;
    if (u == g_.order()) return visit(stack_);
    for (const SachsComponent& c : components_through(u)) {
      apply(c, true);
      const bool go_on = recurse(u + 1, visit);
      apply(c, false);
      if (!go_on) return false;
    }
    return true;
  }

 private:
  void grow_cycles(Vertex u, std::vector<SachsComponent>& out) {
    const Vertex tip = path_.back();
    if (path_.size() >= 3 && path_[1] < tip && g_.adjacent(tip, u)) {
      out.push_back({SachsComponent::Kind::kCycle, path_});
    }
    for (Vertex next : g_.neighbors(tip)) {
      if (covered_[next]) continue;
      covered_[next] = true;
      path_.push_back(next);
      grow_cycles(u, out);
      path_.pop_back();
      covered_[next] = false;
    }
  }

  const Graph& g_;
  std::vector<bool> covered_;
  std::vector<Vertex> path_;
  std::vector<SachsComponent> stack_;
};

// Counts of Sachs subgraphs by (number of cycles, parity of even components).
class Census {
 public:
  explicit Census(std::size_t n) : counts_(n / 3 + 1, {0, 0}) {}

  bool add(const std::vector<SachsComponent>& components) {
    std::size_t cycles = 0, even = 0;
    for (const auto& c : components) {
      cycles += c.kind == SachsComponent::Kind::kCycle;
      even += c.even();
    }
    ++counts_[cycles][even % 2];
    return true;
  }

  void merge(const Census& other) {
    for (std::size_t c = 0; c < counts_.size(); ++c) {
      counts_[c][0] += other.counts_[c][0];
      counts_[c][1] += other.counts_[c][1];
    }
  }

  SachsSums sums() const {
    SachsSums out;
    for (std::size_t c = 0; c < counts_.size(); ++c) {
      const BigInt weight = BigInt(1) << c;
      const BigInt plus = counts_[c][0];
      const BigInt minus = counts_[c][1];
      out.det += weight * (plus - minus);
      out.perm += weight * (plus + minus);
      out.count += static_cast<std::size_t>(counts_[c][0] + counts_[c][1]);
    }
    return out;
  }

 private:
  std::vector<std::array<unsigned long long, 2>> counts_;
};

}  // namespace

void for_each_sachs(const Graph& g,
                    const std::function<bool(const SachsSubgraph&)>& visit,
                    EnumerationLimits limits) {
  require_sachs_bound(g, limits);
  SachsWalker walker(g);
  auto emit = [&](const std::vector<SachsComponent>& components) {
    return visit(SachsSubgraph{g.order(), components});
  };
  walker.recurse(0, emit);
}

std::vector<SachsSubgraph> enumerate_sachs(const Graph& g,
                                           EnumerationLimits limits) {
  std::vector<SachsSubgraph> out;
  for_each_sachs(
      g,
      [&](const SachsSubgraph& s) {
        out.push_back(s);
        return limits.max_results == 0 || out.size() < limits.max_results;
      },
      limits);
  return out;
}

SachsSums sachs_sums_serial(const Graph& g, EnumerationLimits limits) {
  require_sachs_bound(g, limits);
  Census census(g.order());
  SachsWalker walker(g);
  auto add = [&](const std::vector<SachsComponent>& c) { return census.add(c); };
  walker.recurse(0, add);
  return census.sums();
}

SachsSums sachs_sums(const Graph& g, EnumerationLimits limits) {
  require_sachs_bound(g, limits);
  if (g.order() == 0) return sachs_sums_serial(g, limits);

  const std::vector<SachsComponent> roots = SachsWalker(g).components_through(0);
  const auto branches = static_cast<std::ptrdiff_t>(roots.size());
  Census total(g.order());
#pragma omp parallel
  {
    Census local(g.order());
    SachsWalker walker(g);
    auto add = [&](const std::vector<SachsComponent>& c) { return local.add(c); };
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < branches; ++i) {
      walker.apply(roots[i], true);
      walker.recurse(1, add);
      walker.apply(roots[i], false);
    }
#pragma omp critical(sdke_sachs_merge)
    total.merge(local);
  }
  return total.sums();
}

BigInt det_via_sachs(const Graph& g, EnumerationLimits limits) {
  return sachs_sums(g, limits).det;
}

BigInt perm_via_sachs(const Graph& g, EnumerationLimits limits) {
  return sachs_sums(g, limits).perm;
}

}  // namespace sdke
