#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sparsify/generator.hpp"
#include "sparsify/hammock.hpp"
#include "sparsify/scattering.hpp"
#include "sparsify/shortest_paths.hpp"

using namespace sparsify;

namespace {

// Stub 0-1-2-3; hammock X is the cycle 3-4-5-6-7-8 / 3-9-10-11-12 with
// cross edge 8-12; hammock Y hangs at 11: 11-13-14-15 / 11-16-17, cross
// edge 15-17.
WeightedGraph two_hammocks() {
  return fixtures::make(18, {{0, 1, 1},  {1, 2, 1},   {2, 3, 1},   {3, 4, 1},   {4, 5, 1},
                             {5, 6, 1},  {6, 7, 1},   {7, 8, 1},   {3, 9, 1},   {9, 10, 1},
                             {10, 11, 1}, {11, 12, 1}, {8, 12, 1}, {11, 13, 1}, {13, 14, 1},
                             {14, 15, 1}, {11, 16, 1}, {16, 17, 1}, {15, 17, 1}});
}

ScatteringPartition partition_of(Rational delta, std::vector<std::vector<VertexId>> parts, int n) {
  ScatteringPartition p;
  p.delta = delta;
  p.parts = std::move(parts);
  p.part_of.assign(n, -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    for (VertexId v : p.parts[i]) p.part_of[v] = static_cast<int>(i);
  return p;
}

// brute-force count of parts touched by the worst path of length <= delta
int brute_tau(const WeightedGraph& g, const std::vector<int>& part_of, Weight delta) {
  auto d = oracle::floyd_warshall(g);
  int best = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v = u + 1; v < g.num_vertices(); ++v) {
      if (d[u][v] > delta) continue;
      auto p = oracle::canonical_by_enumeration(g, u, v);
      std::set<int> seen;
      for (VertexId x : p) seen.insert(part_of[x]);
      best = std::max<int>(best, static_cast<int>(seen.size()));
    }
  return best;
}

}  // namespace

TEST_SUITE("scattering") {

TEST_CASE("path with only T0: the lower third moves down") {
  auto g = fixtures::path(10);
  auto hd = build_hammock_decomposition(g, 0);
  auto sc = scattering_chop(g, hd, Rational(3));
  CHECK(sc.chop.annulus == std::vector<int>{0, 0, 1, 1, 1, 2, 2, 2, 3, 3});
  for (const auto& m : sc.moves) {
    CHECK(m.rule == "a-ii");
    CHECK(m.owner == -1);
  }
  CHECK(verify_fuzzy(sc.chop).ok());
}

TEST_CASE("two thirds fuzz is too tight at an exact boundary") {
  // v1 sits at d = 1 in annulus 0; its band with fuzz c ends at c * 3 / 2,
  // which only exceeds 1 for c > 2/3
  auto g = fixtures::path(10);
  auto sc = scattering_chop(g, build_hammock_decomposition(g, 0), Rational(3));
  auto tight = sc.chop;
  tight.fuzz = Rational(2, 3);
  auto r = verify_fuzzy(tight);
  REQUIRE_FALSE(r.ok());
  CHECK(r.checks[0].failures[0].find("vertex 1 ") == 0);
  CHECK(verify_fuzzy(sc.chop).ok());
}

TEST_CASE("hammock inside the middle of one annulus does not move") {
  // stub 0-1-2-3-4, triangle 4-5-6; width 12 keeps 5, 6 between 4 and 8
  auto g = fixtures::make(7, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {4, 6, 1},
                              {5, 6, 1}});
  auto hd = build_hammock_decomposition(g, 0);
  REQUIRE(hd.forest.hammocks.size() == 1);
  auto sc = scattering_chop(g, hd, Rational(12));
  for (const auto& m : sc.moves) CHECK(m.owner == -1);
  CHECK(sc.chop.annulus[5] == 1);
  CHECK(sc.chop.annulus[6] == 1);
}

TEST_CASE("two-hammock instance: moved set") {
  auto g = two_hammocks();
  auto hd = build_hammock_decomposition(g, 0);
  REQUIRE(hd.forest.hammocks.size() == 2);
  CHECK(hd.forest.hammocks[0].root_a == 4);
  CHECK(hd.forest.hammocks[1].root_a == 13);
  auto sc = scattering_chop(g, hd, Rational(6));

  // width 6, shift 2. T0 (top 0): d <= 2 goes down. X (top 4 at d = 4,
  // in annulus 1 and at the upper cut 4): annulus-1 members at d >= 4 go
  // up, annulus-2 members at d <= 8 go down. Y (top 13 at d = 7, below
  // the cut 10): annulus-2 members at d <= 8 go down, 15 at d = 9 stays.
  struct Want {
    VertexId v;
    int to;
    const char* rule;
    int owner;
  };
  std::vector<Want> want{{0, 0, "a-ii", -1}, {1, 0, "a-ii", -1}, {2, 0, "a-ii", -1},
                         {5, 2, "a-i", 0},   {6, 1, "a-ii", 0},  {7, 1, "a-ii", 0},
                         {8, 1, "a-ii", 0},  {9, 2, "a-i", 0},   {10, 2, "a-i", 0},
                         {11, 1, "a-ii", 0}, {12, 1, "a-ii", 0}, {13, 1, "a-ii", 0},
                         {14, 1, "a-ii", 1}, {16, 1, "a-ii", 1}, {17, 1, "a-ii", 1}};
  REQUIRE(sc.moves.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CAPTURE(i);
    CHECK(sc.moves[i].vertex == want[i].v);
    CHECK(sc.moves[i].to == want[i].to);
    CHECK(sc.moves[i].rule == want[i].rule);
    CHECK(sc.moves[i].owner == want[i].owner);
  }
  CHECK(sc.chop.annulus[15] == 2);
  CHECK(verify_fuzzy(sc.chop).ok());

  auto stats = measure_cuts(g, hd, sc);
  CHECK(stats.full.value <= 12);
  CHECK(stats.full.value == sc.tau_observed);
}

TEST_CASE("owners: root A belongs to the parent") {
  auto g = two_hammocks();
  auto hd = build_hammock_decomposition(g, 0);
  auto owner = scatter_owners(g, hd);
  CHECK(owner[4] == -1);
  CHECK(owner[13] == 0);
  CHECK(owner[15] == 1);
  CHECK(owner[3] == -1);
}

TEST_CASE("scattering chops are fuzzy chops within the cut budgets") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GeneratorConfig cfg;
    cfg.glue_blocks = seed % 2 == 0;
    int n = 10 + static_cast<int>(seed * 11 % 50);
    auto g = generate_series_parallel(seed, n, cfg);
    auto hd = build_hammock_decomposition(g, 0);
    for (int delta : {3, 6, 9}) {
      auto sc = scattering_chop(g, hd, Rational(delta));
      CAPTURE(seed);
      CAPTURE(delta);
      REQUIRE(verify_fuzzy(sc.chop).ok());
      for (const auto& m : sc.moves) CHECK(std::abs(m.to - m.from) == 1);
      auto s = measure_cuts(g, hd, sc);
      CHECK(s.hammock_cross_edges.value <= kHammockPathCrossEdges);
      CHECK(s.monotone.value <= kMonotoneCutBudget);
      CHECK(s.cross_path.value <= kCrossPathCutBudget);
      CHECK(s.full.value <= kPathCutBudget);
    }
  }
}

TEST_CASE("a single-annulus graph has no cut edges") {
  auto g = fixtures::cycle(4);
  auto sc = scattering_chop(g, build_hammock_decomposition(g, 0), Rational(30));
  // everything within the lower third goes to annulus 0 together
  std::set<int> used(sc.chop.annulus.begin(), sc.chop.annulus.end());
  CHECK(used.size() == 1);
  CHECK(sc.tau_observed == 0);
}

TEST_CASE("partition of a small cycle with a wide delta") {
  auto g = fixtures::cycle(6);
  auto p = scattering_partition(g, Rational(200));
  CHECK(p.width == Rational(200, 88));
  auto r = verify_scattering(g, p);
  CHECK_MESSAGE(r.ok(), r.summary());
  for (const auto& part : p.parts) CHECK(weak_diameter(g, part) <= 3);
}

TEST_CASE("partitions of trees") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    // random recursive tree
    std::mt19937_64 rng(seed);
    int n = 30;
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({static_cast<VertexId>(uniform_below(rng, v)), v, 1});
    auto g = fixtures::make(n, edges);
    for (int delta : {4, 8, 16}) {
      auto p = scattering_partition(g, Rational(delta));
      CHECK(verify_scattering(g, p).ok());
      for (const auto& part : p.parts) CHECK(weak_diameter(g, part) <= delta);
      CHECK_MESSAGE(p.tau_observed <= 5, "seed " << seed << " delta " << delta);
      CHECK(p.tau_observed == brute_tau(g, p.part_of, delta));
    }
  }
}

TEST_CASE("partitions of generated graphs verify and match the brute-force tau") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto g = generate_series_parallel(seed, 14);
    for (int delta : {4, 8}) {
      auto p = scattering_partition(g, Rational(delta));
      auto r = verify_scattering(g, p);
      CHECK_MESSAGE(r.ok(), r.summary());
      CHECK(p.tau_observed == brute_tau(g, p.part_of, delta));
      CHECK(p.hierarchy.levels == kPartitionLevels);
    }
  }
}

TEST_CASE("verify_scattering on degenerate partitions") {
  auto g = fixtures::path(10);
  std::vector<std::vector<VertexId>> singletons;
  for (VertexId v = 0; v < 10; ++v) singletons.push_back({v});
  auto s = partition_of(Rational(4), singletons, 10);
  auto r = verify_scattering(g, s, 3);
  CHECK(r.find("parts are connected")->passed);
  CHECK(r.find("weak diameter at most delta")->passed);
  // a path of length 4 meets 5 singletons
  CHECK_FALSE(r.find("parts per short path within bound")->passed);
  CHECK(verify_scattering(g, s, 5).ok());

  auto whole = partition_of(Rational(4), {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}, 10);
  CHECK_FALSE(verify_scattering(g, whole).find("weak diameter at most delta")->passed);

  auto split = partition_of(Rational(9), {{0, 1, 3}, {2, 4, 5, 6, 7, 8, 9}}, 10);
  CHECK_FALSE(verify_scattering(g, split).find("parts are connected")->passed);

  auto missing = partition_of(Rational(9), {{0, 1, 2}}, 10);
  CHECK_FALSE(verify_scattering(g, missing).find("parts partition the vertices")->passed);
}

}
