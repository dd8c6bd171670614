#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sdke/error.hpp"
#include "sdke/verification.hpp"

namespace sdke {

namespace {

// Draws are taken straight from the engine (whose output sequence is fixed by
// the standard) so graphs do not depend on the library's distributions.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool coin(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidInput("probability must lie in [0, 1]");
  }
}

}  // namespace

Graph random_matchable_graph(std::size_t n, double extra_edge_prob,
                             std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidInput("matchable generator needs an even order >= 2, got " +
                       std::to_string(n));
  }
  require_probability(extra_edge_prob);
  Draws draws(seed);

  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[draws.below(i + 1)]);
  }
  std::vector<std::vector<bool>> planted(n, std::vector<bool>(n, false));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < n; i += 2) {
    planted[order[i]][order[i + 1]] = planted[order[i + 1]][order[i]] = true;
    edges.emplace_back(order[i], order[i + 1]);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!planted[u][v] && draws.coin(extra_edge_prob)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph random_graph(std::size_t n, double edge_prob, std::uint64_t seed) {
  require_probability(edge_prob);
  Draws draws(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (draws.coin(edge_prob)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace sdke
