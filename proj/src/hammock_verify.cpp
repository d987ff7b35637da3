#include <algorithm>
#include <set>

#include "sparsify/hammock.hpp"
#include "sparsify/shortest_paths.hpp"

namespace sparsify {

std::vector<std::string> hammock_lca_problems(const RootedBfsTree& t, const HammockForest& f,
                                              const std::vector<char>& base);

namespace {

std::string edge_str(const WeightedGraph& g, EdgeId e) {
  return "{" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + "}";
}

}  // namespace

Report verify_hammock_decomposition(const WeightedGraph& g, const HammockDecomposition& hd) {
  Report report;
  int n = g.num_vertices();
  auto& partition = report.add("edge partition");
  auto& forest = report.add("forest of hammocks");
  auto& lca = report.add("lca-respecting");
  auto& paths = report.add("shortest cross-edge paths covered");

  RootedBfsTree t;
  try {
    t = build_bfs_tree(g, hd.root);
  } catch (const GraphError& e) {
    partition.fail(e.what());
    return report;
  }
  const auto& hs = hd.forest.hammocks;
  int k = static_cast<int>(hs.size());
  if (static_cast<int>(hd.forest.parent.size()) != k) {
    forest.fail("parent list length differs from hammock count");
    return report;
  }
  for (const auto& h : hs)
    for (VertexId v : h.vertices())
      if (v < 0 || v >= n) {
        partition.fail("hammock vertex out of range");
        return report;
      }

  // (a) E = E(T0) + E(H) + E_p, disjointly
  std::vector<char> base(n, 0);
  for (VertexId v : hd.t0) base[v] = 1;
  if (!base[hd.root]) partition.fail("T0 does not contain the root");
  for (VertexId v : hd.t0)
    if (v != hd.root && !base[t.parent(v)])
      partition.fail("T0 is not a subtree at " + std::to_string(v));
  std::vector<int> uses(g.num_edges(), 0);
  for (EdgeId e : hd.t0_edges(t)) ++uses[e];
  std::vector<EdgeId> expected_ep;
  for (const auto& h : hs)
    if (h.root_b >= 0 && h.root_b < n && t.parent_edge(h.root_b) >= 0)
      expected_ep.push_back(t.parent_edge(h.root_b));
  std::sort(expected_ep.begin(), expected_ep.end());
  if (expected_ep != hd.parent_edges)
    partition.fail("E_p is not the set of parent edges of the B roots");
  for (EdgeId e : hd.parent_edges) ++uses[e];
  std::vector<int> owner(g.num_edges(), -1);
  for (int i = 0; i < k; ++i)
    for (EdgeId e : induced_edges(g, hs[i].vertices())) {
      ++uses[e];
      owner[e] = i;
    }
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (uses[e] != 1)
      partition.fail("edge " + edge_str(g, e) + " covered " + std::to_string(uses[e]) + " times");

  // (b) hammocks, parents, and every simple cycle inside one hammock
  for (int i = 0; i < k; ++i)
    if (auto p = hammock_problem(g, t, hs[i]); !p.empty())
      forest.fail("hammock " + std::to_string(i) + ": " + p);
  for (int i = 0; i < k; ++i) {
    int p = hd.forest.parent[i];
    if (p < -1 || p >= k) forest.fail("parent index out of range");
  }
  if (forest.passed) {
    std::vector<char> roots(k, 0);
    for (int r : hd.forest.roots()) roots[r] = 1;
    try {
      if (hammock_parents(n, hs, roots, "verify") != hd.forest.parent)
        forest.fail("parent pointers disagree with first-hammock-towards-root");
    } catch (const LemmaViolation& e) {
      forest.fail(e.detail());
    }
  }
  std::vector<char> mask(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) mask[e] = owner[e] >= 0;
  auto blocks = biconnected_blocks(g, &mask);
  std::vector<int> block_owner(blocks.count, -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!mask[e]) continue;
    int b = blocks.edge_block[e];
    if (block_owner[b] == -1) block_owner[b] = owner[e];
    else if (block_owner[b] != owner[e])
      forest.fail("a cycle through " + edge_str(g, e) + " crosses hammocks " +
                  std::to_string(block_owner[b]) + " and " + std::to_string(owner[e]));
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      auto a = hs[i].vertices(), b = hs[j].vertices();
      std::vector<VertexId> shared;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
      if (shared.size() > 1)
        forest.fail("hammocks " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                    std::to_string(shared.size()) + " vertices");
      else if (shared.size() == 1 && !blocks.articulation[shared[0]])
        forest.fail("shared vertex " + std::to_string(shared[0]) + " is not a cut vertex");
    }

  // (c)
  if (forest.passed)
    for (const auto& p : hammock_lca_problems(t, hd.forest, base)) lca.fail(p);
  else
    lca.fail("skipped: forest is malformed");

  // (d)
  std::vector<char> in_h(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) in_h[e] = owner[e] >= 0;
  for (VertexId u = 0; u < n; ++u) {
    auto spt = canonical_shortest_paths(g, u);
    for (VertexId v = u + 1; v < n; ++v) {
      if (spt.parent_edge[v] < 0 || t.is_tree_edge(spt.parent_edge[v])) continue;
      auto edges = path_edges(g, spt.path_to(v));
      if (t.is_tree_edge(edges.front())) continue;
      for (EdgeId e : edges)
        if (!in_h[e]) {
          paths.fail("path " + std::to_string(u) + " -> " + std::to_string(v) + " leaves H at " +
                     edge_str(g, e));
          break;
        }
    }
  }
  return report;
}

}  // namespace sparsify
