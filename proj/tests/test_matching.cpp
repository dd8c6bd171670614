#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sdke/error.hpp"
#include "sdke/graph_io.hpp"
#include "sdke/matching.hpp"
#include "sdke/verification.hpp"

using namespace sdke;

TEST_CASE("maximum_matching on small graphs") {
  const Matching k2 = maximum_matching(Graph(2, {{0, 1}}));
  CHECK(k2.size() == 1);
  CHECK(k2.partner(0) == 1);
  CHECK(maximum_matching(cycle_graph(5)).size() == 2);
  CHECK(maximum_matching(Graph(0, {})).size() == 0);

  const Graph g = fixtures::ke_octet();
  const Matching m = maximum_matching(g);
  CHECK(m.size() == 4);
  CHECK(is_perfect(g, m));
}

TEST_CASE("maximum_matching is deterministic") {
  const Graph g = random_graph(12, 0.3, 11);
  CHECK(maximum_matching(g) == maximum_matching(g));
}

TEST_CASE("maximum_matching agrees with exhaustive search (n <= 10)") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = random_graph(2 + seed % 9, 0.15 + 0.05 * (seed % 8), seed);
    const Matching m = maximum_matching(g);
    require_matching_of(g, m);
    CHECK(m.size() == oracle::max_matching_size(g));
  }
}

TEST_CASE("maximum_matching needs blossoms") {
  // Two triangles joined by a path: greedy-only search would get stuck.
  const Graph g(8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
  CHECK(maximum_matching(g).size() == 4);
}

TEST_CASE("is_perfect and is_matchable") {
  const Graph k2(2, {{0, 1}});
  CHECK(is_perfect(k2, Matching(2, {{0, 1}})));
  CHECK_FALSE(is_perfect(path_graph(3), Matching(3, {{0, 1}})));

  const Graph f2 = fixtures::sd_octet();
  CHECK(is_perfect(f2, fixtures::matching(f2, fixtures::kSdOctetM1)));

  CHECK(is_matchable(cycle_graph(4)));
  CHECK_FALSE(is_matchable(cycle_graph(5)));
  CHECK(is_matchable(fixtures::jposy_graph()));
  CHECK_FALSE(is_matchable(fixtures::stability_pair()));

  // A pair that is not an edge is rejected rather than answered.
  CHECK_THROWS_AS(is_perfect(path_graph(4), Matching(4, {{0, 2}, {1, 3}})), InvalidInput);
}

TEST_CASE("Matching rejects overlapping pairs") {
  CHECK_THROWS_AS(Matching(3, {{0, 1}, {1, 2}}), InvalidInput);
  CHECK_THROWS_AS(Matching(2, {{0, 2}}), InvalidInput);
}

TEST_CASE("enumerate_perfect_matchings") {
  CHECK(enumerate_perfect_matchings(Graph(2, {{0, 1}})).members.size() == 1);
  CHECK(enumerate_perfect_matchings(cycle_graph(4)).members.size() == 2);
  CHECK(enumerate_perfect_matchings(cycle_graph(5)).members.empty());

  const Graph g = fixtures::ke_octet();
  const auto family = enumerate_perfect_matchings(g);
  const Matching m1 = fixtures::matching(g, fixtures::kKeOctetM1);
  const Matching m2 = fixtures::matching(g, fixtures::kKeOctetM2);
  CHECK(std::find(family.members.begin(), family.members.end(), m1) != family.members.end());
  CHECK(std::find(family.members.begin(), family.members.end(), m2) != family.members.end());
  for (const Matching& m : family.members) CHECK(is_perfect(g, m));

  const Graph f3 = fixtures::jposy_graph();
  const auto f3_family = enumerate_perfect_matchings(f3);
  CHECK(std::find(f3_family.members.begin(), f3_family.members.end(),
                  fixtures::matching(f3, fixtures::kJposyM)) != f3_family.members.end());
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_perfect_matchings(complete_graph(18)), LimitExceeded);
  const auto capped = enumerate_perfect_matchings(complete_graph(8), {16, 5});
  CHECK(capped.members.size() == 5);
  CHECK(capped.truncated);
  const auto full = enumerate_perfect_matchings(complete_graph(8));
  CHECK(full.members.size() == 105);  // 7!!
  CHECK_FALSE(full.truncated);
  CHECK(enumerate_perfect_matchings(complete_graph(18), {18, 1}).members.size() == 1);
}

TEST_CASE("enumerate_maximum_matchings") {
  CHECK(enumerate_maximum_matchings(path_graph(3)).members.size() == 2);
  CHECK(enumerate_maximum_matchings(cycle_graph(4)).members.size() == 2);
  const auto c5 = enumerate_maximum_matchings(cycle_graph(5));
  CHECK(c5.members.size() == 5);
  for (const Matching& m : c5.members) CHECK(m.size() == 2);
}

TEST_CASE("maximum matching enumeration matches edge-subset enumeration") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_graph(3 + seed % 6, 0.45, seed);
    if (g.size() > 20) continue;
    std::set<std::vector<Edge>> expected;
    std::size_t best = 0;
    const auto subsets = oracle::all_matchings_by_subsets(g);
    for (const auto& s : subsets) best = std::max(best, s.size());
    for (const auto& s : subsets) {
      if (s.size() == best) expected.insert(s);
    }
    std::set<std::vector<Edge>> got;
    for (const Matching& m : enumerate_maximum_matchings(g).members) got.insert(m.pairs());
    CHECK(got == expected);
  }
}

TEST_CASE("exists_max_matching_avoiding") {
  const Graph k2(2, {{0, 1}});
  CHECK_FALSE(exists_max_matching_avoiding(k2, {0, 1}));
  const Graph c4 = cycle_graph(4);
  for (const Edge& e : c4.edges()) CHECK(exists_max_matching_avoiding(c4, e));
  const Graph g3 = fixtures::jposy_graph();
  CHECK(exists_max_matching_avoiding(g3, fixtures::edge(g3, "8", "10")));
  CHECK_FALSE(exists_max_matching_avoiding(g3, fixtures::edge(g3, "10", "11")));
  CHECK_THROWS_AS(exists_max_matching_avoiding(k2, {0, 0}), InvalidInput);
}

TEST_CASE("exists_max_matching_avoiding agrees with enumeration (n <= 12)") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(4 + seed % 9, 0.3, seed + 500);
    const auto family = enumerate_maximum_matchings(g);
    for (const Edge& e : g.edges()) {
      const bool avoided = std::any_of(family.members.begin(), family.members.end(),
                                       [&](const Matching& m) { return !m.contains(e); });
      CHECK(exists_max_matching_avoiding(g, e) == avoided);
    }
  }
}

TEST_CASE("union of two perfect matchings: shared edges and alternating even cycles") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = random_matchable_graph(10, 0.35, seed);
    const auto family = enumerate_perfect_matchings(g);
    const Matching& a = family.members.front();
    for (const Matching& b : family.members) {
      // Every vertex has degree 1 (shared edge) or 2 (one edge from each) in
      // the union, so each component is a K2 or a cycle alternating a/b.
      for (Vertex v = 0; v < g.order(); ++v) {
        if (a.partner(v) == b.partner(v)) continue;
        // Walk the alternating cycle through v and check it closes evenly.
        Vertex x = v;
        std::size_t steps = 0;
        do {
          x = b.partner(a.partner(x));
          steps += 2;
        } while (x != v && steps <= 2 * g.order());
        CHECK(x == v);
        CHECK(steps >= 4);
        CHECK(steps % 2 == 0);
      }
    }
  }
}

TEST_CASE("matching text format") {
  const Graph g = cycle_graph(4);
  const Matching m = parse_matching(g, "# pairs\n0 1\n2 3\n");
  CHECK(m.size() == 2);
  CHECK(serialize_matching(m) == "0 1\n2 3\n");
  CHECK_THROWS_AS(parse_matching(g, "0 2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_matching(g, "0 1\n1 2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_matching(g, "0 9\n"), InvalidInput);
}
