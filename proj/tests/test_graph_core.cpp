#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sparsify/bfs_tree.hpp"
#include "sparsify/generator.hpp"
#include "sparsify/series_parallel.hpp"
#include "sparsify/shortest_paths.hpp"

using namespace sparsify;

TEST_SUITE("graph-core") {

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 0, 1}}), GraphError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 1, 1}, {1, 0, 1}}), GraphError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 2, 1}}), GraphError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 1, 0}}), GraphError);
  auto g = WeightedGraph::from_edges(3, {{2, 1, 4}, {1, 0, 1}});
  REQUIRE(g.num_edges() == 2);
  CHECK(g.edge(0) == Edge{0, 1, 1});
  CHECK(g.edge(1) == Edge{1, 2, 4});
  CHECK(g.find_edge(2, 1) == 1);
  CHECK_FALSE(g.find_edge(0, 2).has_value());
}

TEST_CASE("bfs tree on a path") {
  auto t = build_bfs_tree(fixtures::path(3), 0);
  CHECK(t.depth(0) == 0);
  CHECK(t.depth(1) == 1);
  CHECK(t.depth(2) == 2);
  CHECK(t.cross_edges().empty());
}

TEST_CASE("bfs tree on a 4-cycle takes the lower parent") {
  // a=0, b=1, c=2, d=3 with cycle a-b-d-c-a
  auto g = fixtures::make(4, {{0, 1, 1}, {1, 3, 1}, {3, 2, 1}, {2, 0, 1}});
  auto t = build_bfs_tree(g, 0);
  CHECK(t.parent(1) == 0);
  CHECK(t.parent(2) == 0);
  CHECK(t.parent(3) == 1);
  REQUIRE(t.cross_edges().size() == 1);
  CHECK(g.edge(t.cross_edges()[0]) == Edge{2, 3, 1});
}

TEST_CASE("bfs tree on K4 has three cross edges from every root") {
  auto g = fixtures::complete(4);
  for (VertexId r = 0; r < 4; ++r) CHECK(build_bfs_tree(g, r).cross_edges().size() == 3);
}

TEST_CASE("bfs tree names an unreachable vertex") {
  auto g = fixtures::make(3, {{0, 1, 1}});
  try {
    build_bfs_tree(g, 0);
    FAIL("expected an error");
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
}

TEST_CASE("lca examples") {
  auto p = build_bfs_tree(fixtures::path(4), 0);
  CHECK(p.lca(1, 2) == 1);
  CHECK(p.lca(3, 3) == 3);
  auto s = build_bfs_tree(fixtures::star(3), 0);
  CHECK(s.lca(1, 2) == 0);
  // balanced binary tree of depth 2
  auto b = fixtures::make(7, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 5, 1}, {2, 6, 1}});
  auto t = build_bfs_tree(b, 0);
  CHECK(t.lca(3, 5) == 0);
  CHECK(t.lca(3, 4) == 1);
}

TEST_CASE("lca and tree paths agree with parent climbing") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = generate_series_parallel(seed, 30);
    for (VertexId r : {0, 7, 29}) {
      auto t = build_bfs_tree(g, r);
      std::vector<VertexId> parent(30);
      std::vector<int> depth(30);
      for (VertexId v = 0; v < 30; ++v) {
        parent[v] = t.parent(v);
        depth[v] = t.hops(v);
      }
      for (VertexId u = 0; u < 30; ++u)
        for (VertexId v = 0; v < 30; ++v) {
          REQUIRE(t.lca(u, v) == oracle::climb_lca(parent, depth, u, v));
          CHECK(t.is_ancestor(u, v) == (oracle::climb_lca(parent, depth, u, v) == u));
        }
      CHECK(t.tree_path(3, 17) == oracle::climb_tree_path(parent, depth, 3, 17));
    }
  }
}

TEST_CASE("bfs tree depths are distances and tree edges are tight") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GeneratorConfig cfg;
    cfg.max_weight = seed % 3 == 0 ? 4 : 1;
    auto g = generate_series_parallel(seed, 25, cfg);
    auto d = oracle::floyd_warshall(g);
    auto t = build_bfs_tree(g, 0);
    for (VertexId v = 0; v < 25; ++v) {
      CHECK(t.depth(v) == d[0][v]);
      if (v != 0) CHECK(t.depth(v) == t.depth(t.parent(v)) + g.edge(t.parent_edge(v)).w);
    }
    CHECK(t.tree_edges().size() + t.cross_edges().size() == std::size_t(g.num_edges()));
    if (cfg.max_weight == 1)
      for (EdgeId e : t.cross_edges()) {
        auto diff = t.depth(g.edge(e).u) - t.depth(g.edge(e).v);
        CHECK(std::abs(diff) <= 1);
      }
  }
}

TEST_CASE("shortest path on a weighted triangle") {
  // a=0, b=1, c=2
  auto g = fixtures::make(3, {{0, 1, 3}, {0, 2, 1}, {1, 2, 1}});
  CHECK(canonical_path(g, 0, 1) == Path{0, 2, 1});
  CHECK(path_length(g, canonical_path(g, 0, 1)) == 2);
  CHECK(canonical_path(fixtures::path(5), 0, 4) == Path{0, 1, 2, 3, 4});
}

TEST_CASE("canonical paths match exhaustive enumeration") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GeneratorConfig cfg;
    cfg.max_weight = seed % 2 ? 1 : 3;
    auto g = seed % 4 == 0 ? generate_random_graph(seed, 9, 0.4) : generate_series_parallel(seed, 10, cfg);
    if (!is_connected(g)) continue;
    AllPairsPaths all(g);
    auto d = oracle::floyd_warshall(g);
    int n = g.num_vertices();
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v) {
        REQUIRE(all.dist(u, v) == d[u][v]);
        Path p = all.path(u, v);
        REQUIRE(p == oracle::canonical_by_enumeration(g, u, v));
        // symmetric
        Path back = all.path(v, u);
        std::reverse(back.begin(), back.end());
        CHECK(back == p);
        ++checked;
      }
  }
  CHECK(checked > 1000);
}

TEST_CASE("subpaths of canonical paths are canonical") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = generate_series_parallel(seed, 40);
    AllPairsPaths all(g);
    for (VertexId u = 0; u < 40; u += 3)
      for (VertexId v = 0; v < 40; v += 2) {
        Path p = all.path(u, v);
        for (std::size_t i = 0; i < p.size(); ++i)
          for (std::size_t j = i; j < p.size(); j += 2)
            REQUIRE(all.path(p[i], p[j]) == Path(p.begin() + i, p.begin() + j + 1));
      }
  }
}

TEST_CASE("series-parallel recognition examples") {
  auto k4 = recognize_series_parallel(fixtures::complete(4));
  CHECK_FALSE(k4.series_parallel);
  REQUIRE(k4.witness);
  CHECK(check_clawed_cycle(fixtures::complete(4), *k4.witness).empty());
  CHECK(is_series_parallel(fixtures::path(6)));
  CHECK(is_series_parallel(fixtures::star(5)));
  CHECK(is_series_parallel(fixtures::complete_bipartite(2, 3)));
  CHECK(is_series_parallel(fixtures::grid(2, 6)));
  CHECK_FALSE(is_series_parallel(fixtures::grid(3, 3)));
  CHECK_FALSE(is_series_parallel(fixtures::wheel(5)));
  CHECK_FALSE(is_series_parallel(fixtures::complete_bipartite(3, 3)));
}

TEST_CASE("clawed cycle checker rejects broken witnesses") {
  auto g = fixtures::complete(4);
  auto w = *recognize_series_parallel(g).witness;
  auto bad = w;
  bad.claws.pop_back();
  CHECK_FALSE(check_clawed_cycle(g, bad).empty());
  bad = w;
  bad.cycle.back() = -1;
  CHECK_FALSE(check_clawed_cycle(g, bad).empty());
}

TEST_CASE("the two K4 oracles agree") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto g = generate_random_graph(seed, 4 + seed % 5, 0.3 + 0.05 * (seed % 8));
    CHECK(oracle::has_k4_minor_by_treewidth(g) == oracle::has_k4_minor_by_branch_sets(g));
  }
  CHECK(oracle::treewidth(fixtures::complete(5)) == 4);
  CHECK(oracle::treewidth(fixtures::cycle(7)) == 2);
  CHECK(oracle::treewidth(fixtures::path(7)) == 1);
}

TEST_CASE("recognition agrees with the K4 oracle and witnesses hold") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    int n = 4 + static_cast<int>(seed % 9);
    auto g = generate_random_graph(seed, n, 0.2 + 0.05 * (seed % 10));
    auto rec = recognize_series_parallel(g);
    REQUIRE(rec.series_parallel == !oracle::has_k4_minor_by_treewidth(g));
    if (!rec.series_parallel) {
      REQUIRE(rec.witness);
      CHECK(check_clawed_cycle(g, *rec.witness) == "");
    }
  }
}

TEST_CASE("generator: base case, determinism, closure") {
  auto two = generate_series_parallel(5, 2);
  CHECK(two.num_vertices() == 2);
  CHECK(two.num_edges() == 1);
  CHECK(generate_series_parallel(9, 60).edges() == generate_series_parallel(9, 60).edges());
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    GeneratorConfig cfg;
    cfg.glue_blocks = seed % 3 == 0;
    cfg.biconnected = seed % 3 == 1;
    int n = 3 + static_cast<int>(seed % 12);
    auto g = generate_series_parallel(seed, n, cfg);
    REQUIRE(g.num_vertices() == n);
    REQUIRE(is_connected(g));
    REQUIRE_FALSE(oracle::has_k4_minor_by_treewidth(g));
    REQUIRE(is_series_parallel(g));
  }
}

TEST_CASE("uniform_below stays in range and hits every value") {
  std::mt19937_64 rng(3);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 700; ++i) {
    auto x = uniform_below(rng, 7);
    REQUIRE(x < 7);
    ++seen[x];
  }
  for (int c : seen) CHECK(c > 0);
}

TEST_CASE("unit expansion") {
  auto unit = fixtures::cycle(5);
  auto same = expand_unit_weights(unit);
  CHECK(same.graph == unit);
  CHECK(same.vertex_map == std::vector<VertexId>{0, 1, 2, 3, 4});

  auto single = expand_unit_weights(fixtures::make(2, {{0, 1, 3}}));
  CHECK(single.graph.num_vertices() == 4);
  CHECK(single.graph.num_edges() == 3);

  auto tri = fixtures::make(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
  auto ex = expand_unit_weights(tri);
  CHECK(ex.graph.num_edges() == 6);
  CHECK(ex.graph.has_unit_weights());
  auto before = oracle::floyd_warshall(tri);
  auto after = oracle::floyd_warshall(ex.graph);
  for (VertexId a = 0; a < 3; ++a)
    for (VertexId b = 0; b < 3; ++b) CHECK(after[ex.vertex_map[a]][ex.vertex_map[b]] == before[a][b]);

  CHECK_THROWS_AS(expand_unit_weights(fixtures::make(2, {{0, 1, kMaxEdgeWeight + 1}})), GraphError);
}

TEST_CASE("biconnected blocks and articulation points") {
  // two triangles sharing vertex 2
  auto g = fixtures::make(5, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}});
  auto b = biconnected_blocks(g);
  CHECK(b.count == 2);
  CHECK(b.articulation[2]);
  CHECK_FALSE(b.articulation[0]);
  CHECK(b.edge_block[0] == b.edge_block[1]);
  CHECK(b.edge_block[0] != b.edge_block[5]);
}

}
