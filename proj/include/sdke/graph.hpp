#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sdke {

using Vertex = std::uint32_t;

/// Undirected edge in canonical form (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  /// Orders the endpoints; does not reject loops (Graph construction does).
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class DuplicateEdges { kReject, kMerge };

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Each vertex carries an external label (the
/// name it had in the source data), so fixtures written with 1-based
/// or lettered vertices keep their printed names through every derived graph.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on loops, out-of-range endpoints and (under kReject)
  /// duplicate edges. Labels default to the decimal vertex ids.
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
        DuplicateEdges duplicates = DuplicateEdges::kReject);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges,
        DuplicateEdges duplicates = DuplicateEdges::kReject);

  /// Builds a graph from edges written with external labels. Vertices are
  /// numbered in the order of `vertex_labels`, which must name every endpoint.
  static Graph from_labeled(
      const std::vector<std::string>& vertex_labels,
      const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }
  bool contains(Vertex v) const { return v < order(); }

  /// Edges in lexicographic canonical order.
  const std::vector<Edge>& edges() const { return edges_; }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Index of the vertex carrying `label`, or order() when absent.
  Vertex find_label(const std::string& label) const;

  Graph with_labels(std::vector<std::string> labels) const;

  /// Same vertex set, edges and labels.
  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
             DuplicateEdges duplicates);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

/// Induced subgraph plus the map from its vertices back to the host.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;
};

/// G[S]. `vertices` may be in any order and is deduplicated; the subgraph
/// numbers them in increasing host order and inherits host labels.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// G - e. Throws InvalidInput when e is not an edge of g.
Graph delete_edge(const Graph& g, Edge e);

/// Disjoint union; the second graph's vertices are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace sdke
