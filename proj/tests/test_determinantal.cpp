#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sdke/determinantal.hpp"
#include "sdke/error.hpp"
#include "sdke/verification.hpp"

using namespace sdke;

namespace {

struct Known {
  const char* name;
  Graph g;
  int det;
  int perm;
};

std::vector<Known> small_graphs() {
  return {{"K2", Graph(2, {{0, 1}}), -1, 1},
          {"C3", cycle_graph(3), 2, 2},
          {"C4", cycle_graph(4), 0, 4},
          {"P4", path_graph(4), 1, 1},
          {"K4", complete_graph(4), -3, 9},
          {"P3", path_graph(3), 0, 0},
          {"empty", Graph(0, {}), 1, 1},
          {"K1", Graph(1, {}), 0, 0}};
}

}  // namespace

TEST_CASE("small graphs by every method") {
  for (const Known& k : small_graphs()) {
    CAPTURE(k.name);
    CHECK(det_adjacency(k.g) == k.det);
    CHECK(det_via_sachs(k.g) == k.det);
    CHECK(perm_adjacency(k.g) == k.perm);
    CHECK(perm_adjacency_serial(k.g) == k.perm);
    CHECK(perm_via_sachs(k.g) == k.perm);
    const auto e = oracle::expand_over_permutations(k.g);
    CHECK(e.det == k.det);
    CHECK(e.perm == k.perm);
  }
}

TEST_CASE("Sachs subgraphs of C4") {
  const auto all = enumerate_sachs(cycle_graph(4));
  REQUIRE(all.size() == 3);
  std::size_t with_cycle = 0;
  for (const auto& s : all) {
    with_cycle += s.cycle_count();
    CHECK(s.even_component_count() == s.components.size());
  }
  CHECK(with_cycle == 1);
}

TEST_CASE("Harary sums agree with the edge-subset scan and Leibniz") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_graph(3 + seed % 6, 0.45, seed);
    if (g.size() > 20) continue;
    const auto subsets = oracle::sachs_by_edge_subsets(g);
    const auto sums = sachs_sums_serial(g);
    CHECK(sums.det == subsets.det);
    CHECK(sums.perm == subsets.perm);
    CHECK(sums.count == subsets.count);
    const auto e = oracle::expand_over_permutations(g);
    CHECK(sums.det == e.det);
    CHECK(sums.perm == e.perm);
    CHECK(det_adjacency(g) == e.det);
    CHECK(perm_adjacency(g) == e.perm);
  }
}

TEST_CASE("enumeration is canonical and duplicate-free") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(4 + seed % 7, 0.5, seed + 40);
    const auto all = enumerate_sachs(g);
    std::set<std::vector<Edge>> seen;
    for (const auto& s : all) {
      CHECK(is_sachs_subgraph_of(g, s));
      auto edges = s.edges();
      std::sort(edges.begin(), edges.end());
      CHECK(seen.insert(edges).second);
    }
    CHECK(all.size() == sachs_sums(g).count);
  }
}

TEST_CASE("is_sachs_subgraph_of rejects malformed subgraphs") {
  const Graph c4 = cycle_graph(4);
  SachsSubgraph s{4, {{SachsComponent::Kind::kEdge, {0, 1}}}};
  CHECK_FALSE(is_sachs_subgraph_of(c4, s));  // not spanning
  s.components.push_back({SachsComponent::Kind::kEdge, {0, 2}});
  CHECK_FALSE(is_sachs_subgraph_of(c4, s));  // not an edge, overlaps
  s.components.back().vertices = {2, 3};
  CHECK(is_sachs_subgraph_of(c4, s));
  SachsSubgraph cyc{4, {{SachsComponent::Kind::kCycle, {0, 3, 2, 1}}}};
  CHECK_FALSE(is_sachs_subgraph_of(c4, cyc));  // wrong direction
  cyc.components[0].vertices = {0, 1, 2, 3};
  CHECK(is_sachs_subgraph_of(c4, cyc));
}

TEST_CASE("parallel kernels match their serial references") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = random_graph(12 + seed % 5, 0.3, seed + 80);
    CHECK(perm_adjacency(g) == perm_adjacency_serial(g));
    const auto a = sachs_sums(g);
    const auto b = sachs_sums_serial(g);
    CHECK(a.det == b.det);
    CHECK(a.perm == b.perm);
    CHECK(a.count == b.count);
  }
}

TEST_CASE("permanent bounds") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(2 + seed % 9, 0.4, seed + 120);
    const BigInt p = perm_adjacency(g);
    const BigInt d = det_adjacency(g);
    CHECK(p >= (d < 0 ? BigInt(-d) : d));
    const auto pm = enumerate_perfect_matchings(g).members.size();
    // Each perfect matching M contributes the term of M used twice.
    CHECK(p >= BigInt(pm));
  }
}

TEST_CASE("determinant of a disjoint union is the product") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph a = random_graph(3 + seed % 5, 0.5, seed + 200);
    const Graph b = random_graph(2 + seed % 4, 0.5, seed + 300);
    const Graph u = disjoint_union(a, b);
    CHECK(det_adjacency(u) == det_adjacency(a) * det_adjacency(b));
    CHECK(perm_adjacency(u) == perm_adjacency(a) * perm_adjacency(b));
  }
}

TEST_CASE("large values stay exact") {
  // perm(K_n) counts derangements; D(20) = 895014631192902121.
  CHECK(perm_adjacency(complete_graph(20)) == BigInt("895014631192902121"));
  // det(J - I) = (-1)^(n-1) (n-1).
  CHECK(det_adjacency(complete_graph(25)) == 24);
  CHECK(det_adjacency(complete_graph(26)) == -25);
  // D(24) overflows 64 bits.
  CHECK(perm_adjacency(complete_graph(24)) == BigInt("228250211305338670494289"));
}

TEST_CASE("cut disjointness") {
  const Graph g = fixtures::jposy_graph();
  const CutDisjointness c = sachs_cut_disjointness(g);
  CHECK(c.ok);
  CHECK(c.subgraphs_checked == sachs_sums(g).count);
  // A cut that does hit a Sachs subgraph is reported with a witness.
  const Edge e = fixtures::edge(g, "1", "0");
  const CutDisjointness bad = sachs_cut_disjointness(g, {e});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.offending.has_value());
  CHECK(bad.offending->uses(e));
  CHECK(bad.edge == e);
}

TEST_CASE("factorization on the fixtures") {
  const Graph f1 = fixtures::ke_octet();
  const FactorizationReport r1 = factorization_report(f1);
  CHECK(r1.det_sd == 1);
  CHECK(r1.det_g == r1.det_ke);
  CHECK(r1.det_product_ok);
  CHECK(r1.perm_product_ok);

  const Graph f3 = fixtures::jposy_graph();
  const FactorizationReport r3 = factorization_report(f3);
  CHECK(r3.det_product_ok);
  CHECK(r3.perm_product_ok);
  CHECK(r3.cut_size == 1);
  CHECK(r3.det_ke == -1);
  CHECK(r3.det_g == det_via_sachs(f3));

  const Graph f5 = fixtures::example32();
  FactorizationOptions opts;
  opts.permanents = false;
  const FactorizationReport r5 = factorization_report(f5, opts);
  CHECK(r5.det_g == 5);
  CHECK(r5.det_sd == -5);
  CHECK(r5.det_ke == -1);
  CHECK(r5.det_product_ok);
  CHECK_FALSE(r5.perm_g.has_value());
  CHECK(r5.perm_product_ok);
}

TEST_CASE("32-vertex example sides") {
  const Graph g = fixtures::example32();
  const SdKePartition p = sd_ke_partition(g);
  CHECK(p.sd_vertices == fixtures::ids(g, fixtures::kExampleSd));
  CHECK(p.ke_vertices == fixtures::ids(g, fixtures::kExampleKe));
}

TEST_CASE("factorization over a Sachs method") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_matchable_graph(4 + 2 * (seed % 4), 0.3, seed + 600);
    FactorizationOptions opts;
    opts.det_method = DetMethod::kSachs;
    opts.perm_method = PermMethod::kSachs;
    const FactorizationReport r = factorization_report(g, opts);
    CHECK(r.det_product_ok);
    CHECK(r.perm_product_ok);
    CHECK(r.det_g == det_adjacency(g));
    CHECK(*r.perm_g == perm_adjacency(g));
  }
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(perm_adjacency(complete_graph(31)), LimitExceeded);
  CHECK_THROWS_AS(perm_adjacency(complete_graph(6), 5), LimitExceeded);
  CHECK_THROWS_AS(sachs_sums(complete_graph(21)), LimitExceeded);
  CHECK_THROWS_AS(enumerate_sachs(complete_graph(8), {7, 0}), LimitExceeded);
  CHECK(enumerate_sachs(complete_graph(6), {20, 5}).size() == 5);
  CHECK_THROWS_AS(factorization_report(cycle_graph(5)), NotMatchable);
}
