#include "sdke/alternating.hpp"

#include <algorithm>
#include <string>

#include "sdke/error.hpp"

namespace sdke {

namespace {

void require_perfect(const Graph& g, const Matching& m, Vertex v) {
  if (!is_perfect(g, m)) {
    throw InvalidInput("alternating-walk reachability needs a perfect matching");
  }
  if (!g.contains(v)) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  }
}

// State s = 2*x + p. p = 1: the walk just arrived at x through a matched
// edge, so it must leave through a non-matching one. p = 0: arrived through
// a non-matching edge, so the only move is the matched edge x - M(x).
constexpr std::size_t state(Vertex x, bool matched) {
  return 2 * static_cast<std::size_t>(x) + (matched ? 1 : 0);
}

constexpr std::size_t kNoParent = ~std::size_t{0};

// BFS from the state reached by the first edge v - M(v). Records parents only
// when requested. Stops early once `target` is reached.
std::vector<std::size_t> explore(const Graph& g, const Matching& m, Vertex v,
                                 std::vector<bool>& seen,
                                 std::size_t target = kNoParent) {
  const std::size_t states = 2 * g.order();
  seen.assign(states, false);
  std::vector<std::size_t> parent(states, kNoParent);
  std::vector<std::size_t> queue;
  queue.reserve(states);
  const std::size_t start = state(m.partner(v), true);
  seen[start] = true;
  queue.push_back(start);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t s = queue[head];
    if (s == target) break;
    const auto x = static_cast<Vertex>(s / 2);
    auto visit = [&](std::size_t t) {
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = s;
        queue.push_back(t);
      }
    };
    if (s % 2 == 1) {
      for (Vertex y : g.neighbors(x)) {
        if (y != m.partner(x)) visit(state(y, false));
      }
    } else {
      visit(state(m.partner(x), true));
    }
  }
  return parent;
}

}  // namespace

std::string_view to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::kMM: return "mm";
    case WalkKind::kNN: return "nn";
    case WalkKind::kMN: return "mn";
    case WalkKind::kNM: return "nm";
  }
  return "?";
}

std::optional<WalkKind> parse_walk_kind(std::string_view text) {
  if (text == "mm") return WalkKind::kMM;
  if (text == "nn") return WalkKind::kNN;
  if (text == "mn") return WalkKind::kMN;
  if (text == "nm") return WalkKind::kNM;
  return std::nullopt;
}

std::string_view to_string(WalkDefect defect) {
  switch (defect) {
    case WalkDefect::kNone: return "ok";
    case WalkDefect::kTooShort: return "walk has no edges";
    case WalkDefect::kVertexOutOfRange: return "vertex out of range";
    case WalkDefect::kNotAnEdge: return "consecutive vertices not adjacent";
    case WalkDefect::kNotAlternating: return "edges do not alternate";
    case WalkDefect::kKindMismatch: return "end edges disagree with kind";
  }
  return "?";
}

WalkCheck verify_walk(const Graph& g, const Matching& m,
                      const AlternatingWalk& w) {
  if (m.order() != g.order()) return {WalkDefect::kVertexOutOfRange, 0};
  if (w.vertices.size() < 2) return {WalkDefect::kTooShort, 0};
  for (Vertex x : w.vertices) {
    if (!g.contains(x)) return {WalkDefect::kVertexOutOfRange, 0};
  }
  std::vector<bool> in_m(w.length());
  for (std::size_t i = 0; i < w.length(); ++i) {
    const Vertex a = w.vertices[i];
    const Vertex b = w.vertices[i + 1];
    if (!g.adjacent(a, b)) return {WalkDefect::kNotAnEdge, i};
    in_m[i] = m.partner(a) == b;
    if (i > 0 && in_m[i] == in_m[i - 1]) return {WalkDefect::kNotAlternating, i};
  }
  const bool first = in_m.front();
  const bool last = in_m.back();
  bool ok = false;
  switch (w.kind) {
    case WalkKind::kMM: ok = first && last; break;
    case WalkKind::kNN: ok = !first && !last; break;
    case WalkKind::kMN: ok = first && !last; break;
    case WalkKind::kNM: ok = !first && last; break;
  }
  if (!ok) return {WalkDefect::kKindMismatch, 0};
  return {};
}

bool ReachSet::contains(Vertex u) const {
  return std::binary_search(members.begin(), members.end(), u);
}

ReachSet reachable_set(const Graph& g, const Matching& m, Vertex v) {
  require_perfect(g, m, v);
  std::vector<bool> seen;
  explore(g, m, v, seen);
  ReachSet out{v, {}};
  for (Vertex x = 0; x < g.order(); ++x) {
    if (seen[state(x, true)]) out.members.push_back(x);
  }
  return out;
}

bool has_mm_closed_walk(const Graph& g, const Matching& m, Vertex v) {
  require_perfect(g, m, v);
  std::vector<bool> seen;
  explore(g, m, v, seen, state(v, true));
  return seen[state(v, true)];
}

std::optional<AlternatingWalk> semi_jposy_witness(const Graph& g,
                                                  const Matching& m, Vertex v) {
  require_perfect(g, m, v);
  std::vector<bool> seen;
  const std::size_t target = state(v, true);
  const auto parent = explore(g, m, v, seen, target);
  if (!seen[target]) return std::nullopt;

  // The start state (M(v), matched) has no parent; every state on the chain
  // contributes its vertex, and v itself opens the walk.
  std::vector<Vertex> tail;
  for (std::size_t s = target; s != kNoParent; s = parent[s]) {
    tail.push_back(static_cast<Vertex>(s / 2));
  }
  AlternatingWalk walk{{v}, WalkKind::kMM};
  walk.vertices.insert(walk.vertices.end(), tail.rbegin(), tail.rend());
  return walk;
}

std::vector<bool> closed_walk_flags_serial(const Graph& g, const Matching& m) {
  if (!is_perfect(g, m)) {
    throw InvalidInput("alternating-walk reachability needs a perfect matching");
  }
  std::vector<bool> flags(g.order());
  std::vector<bool> seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    explore(g, m, v, seen, state(v, true));
    flags[v] = seen[state(v, true)];
  }
  return flags;
}

std::vector<bool> closed_walk_flags(const Graph& g, const Matching& m) {
  if (!is_perfect(g, m)) {
    throw InvalidInput("alternating-walk reachability needs a perfect matching");
  }
  const auto n = static_cast<std::ptrdiff_t>(g.order());
  // vector<bool> packs bits, so each thread writes a byte array instead.
  std::vector<unsigned char> bytes(g.order(), 0);
#pragma omp parallel
  {
    std::vector<bool> seen;
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto v = static_cast<Vertex>(i);
      explore(g, m, v, seen, state(v, true));
      bytes[i] = seen[state(v, true)] ? 1 : 0;
    }
  }
  return std::vector<bool>(bytes.begin(), bytes.end());
}

}  // namespace sdke
