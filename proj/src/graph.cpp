#include "sdke/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "sdke/error.hpp"

namespace sdke {

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
             DuplicateEdges duplicates) {
  build(n, edges, duplicates);
}

Graph::Graph(std::size_t n,
             std::initializer_list<std::pair<Vertex, Vertex>> edges,
             DuplicateEdges duplicates) {
  build(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()),
        duplicates);
}

void Graph::build(std::size_t n,
                  std::span<const std::pair<Vertex, Vertex>> edges,
                  DuplicateEdges duplicates) {
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw InvalidInput("edge endpoint out of range: " + std::to_string(a) +
                         " " + std::to_string(b) + " with n = " +
                         std::to_string(n));
    }
    if (a == b) {
      throw InvalidInput("loop edge at vertex " + std::to_string(a));
    }
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    if (duplicates == DuplicateEdges::kReject) {
      throw InvalidInput("duplicate edge " + std::to_string(dup->u) + " " +
                         std::to_string(dup->v));
    }
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  labels_.resize(n);
  for (std::size_t v = 0; v < n; ++v) labels_[v] = std::to_string(v);
}

Graph Graph::from_labeled(
    const std::vector<std::string>& vertex_labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, Vertex> index;
  for (std::size_t i = 0; i < vertex_labels.size(); ++i) {
    if (!index.emplace(vertex_labels[i], static_cast<Vertex>(i)).second) {
      throw InvalidInput("repeated vertex label '" + vertex_labels[i] + "'");
    }
  }
  auto lookup = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) throw InvalidInput("unknown vertex label '" + l + "'");
    return it->second;
  };
  std::vector<std::pair<Vertex, Vertex>> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) ids.emplace_back(lookup(a), lookup(b));
  Graph g(vertex_labels.size(), ids);
  g.labels_ = vertex_labels;
  return g;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

Vertex Graph::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return static_cast<Vertex>(it - labels_.begin());
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != order()) {
    throw InvalidInput("label table size does not match vertex count");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

namespace {

std::vector<std::pair<Vertex, Vertex>> as_pairs(const std::vector<Edge>& edges) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.to_host.assign(vertices.begin(), vertices.end());
  for (Vertex v : sub.to_host) {
    if (!g.contains(v)) {
      throw InvalidInput("induced subgraph vertex out of range: " +
                         std::to_string(v));
    }
  }
  std::sort(sub.to_host.begin(), sub.to_host.end());
  sub.to_host.erase(std::unique(sub.to_host.begin(), sub.to_host.end()),
                    sub.to_host.end());

  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(g.order(), kAbsent);
  for (std::size_t i = 0; i < sub.to_host.size(); ++i) {
    local[sub.to_host[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != kAbsent && local[e.v] != kAbsent) {
      edges.emplace_back(local[e.u], local[e.v]);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(sub.to_host.size());
  for (Vertex v : sub.to_host) labels.push_back(g.label(v));
  sub.graph = Graph(sub.to_host.size(), edges).with_labels(std::move(labels));
  return sub;
}

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw InvalidInput("edge " + std::to_string(e.u) + " " +
                       std::to_string(e.v) + " is not in the graph");
  }
  std::vector<Edge> kept;
  kept.reserve(g.size() - 1);
  for (const Edge& f : g.edges()) {
    if (f != e) kept.push_back(f);
  }
  return Graph(g.order(), as_pairs(kept)).with_labels(g.labels());
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = as_pairs(a.edges());
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.order() + b.order(), edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  }
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace sdke
