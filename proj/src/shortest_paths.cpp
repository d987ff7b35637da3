#include "sparsify/shortest_paths.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace sparsify {

bool edge_rank_less(const WeightedGraph& g, EdgeId a, EdgeId b) {
  const Edge& ea = g.edge(a);
  const Edge& eb = g.edge(b);
  return ea.v != eb.v ? ea.v < eb.v : ea.u < eb.u;
}

Path ShortestPathTree::path_to(VertexId v) const {
  if (!reaches(v))
    throw GraphError("vertex " + std::to_string(v) + " unreachable from " +
                     std::to_string(source));
  Path path;
  for (VertexId x = v; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

// Highest-ranked edge on the climb from a and b to their meeting point,
// starting with the given final edges. Returns true when the a-branch wins.
bool branch_a_wins(const WeightedGraph& g, const ShortestPathTree& t,
                   VertexId a, EdgeId a_last, VertexId b, EdgeId b_last) {
  EdgeId max_a = a_last, max_b = b_last;
  auto bump = [&](EdgeId& best, EdgeId e) {
    if (edge_rank_less(g, best, e)) best = e;
  };
  while (t.hops[a] > t.hops[b]) {
    bump(max_a, t.parent_edge[a]);
    a = t.parent[a];
  }
  while (t.hops[b] > t.hops[a]) {
    bump(max_b, t.parent_edge[b]);
    b = t.parent[b];
  }
  while (a != b) {
    bump(max_a, t.parent_edge[a]);
    a = t.parent[a];
    bump(max_b, t.parent_edge[b]);
    b = t.parent[b];
  }
  return edge_rank_less(g, max_a, max_b);
}

}  // namespace

ShortestPathTree canonical_shortest_paths(const WeightedGraph& g,
                                          VertexId source) {
  int n = g.num_vertices();
  if (source < 0 || source >= n)
    throw GraphError("source out of range: " + std::to_string(source));
  ShortestPathTree t;
  t.source = source;
  t.dist.assign(n, kUnreachable);
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  t.hops.assign(n, 0);
  std::vector<char> done(n, 0);

  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  t.dist[source] = 0;
  queue.push({0, source});
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (done[v] || d != t.dist[v]) continue;
    done[v] = 1;
    if (v != source) {
      // every finished neighbour on a shortest route is a candidate parent
      for (const auto& inc : g.neighbors(v)) {
        VertexId p = inc.to;
        if (!done[p] || t.dist[p] + g.edge(inc.edge).w != d) continue;
        if (t.parent[v] == -1 ||
            branch_a_wins(g, t, p, inc.edge, t.parent[v], t.parent_edge[v])) {
          t.parent[v] = p;
          t.parent_edge[v] = inc.edge;
        }
      }
      t.hops[v] = t.hops[t.parent[v]] + 1;
    }
    for (const auto& inc : g.neighbors(v)) {
      Weight nd = d + g.edge(inc.edge).w;
      if (!done[inc.to] &&
          (t.dist[inc.to] == kUnreachable || nd < t.dist[inc.to])) {
        t.dist[inc.to] = nd;
        queue.push({nd, inc.to});
      }
    }
  }
  return t;
}

std::vector<Weight> distances_from(const WeightedGraph& g, VertexId source) {
  std::vector<Weight> dist(g.num_vertices(), kUnreachable);
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0;
  queue.push({0, source});
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d != dist[v]) continue;
    for (const auto& inc : g.neighbors(v)) {
      Weight nd = d + g.edge(inc.edge).w;
      if (dist[inc.to] == kUnreachable || nd < dist[inc.to]) {
        dist[inc.to] = nd;
        queue.push({nd, inc.to});
      }
    }
  }
  return dist;
}

Path canonical_path(const WeightedGraph& g, VertexId from, VertexId to) {
  return canonical_shortest_paths(g, from).path_to(to);
}

AllPairsPaths::AllPairsPaths(const WeightedGraph& g) {
  trees_.reserve(g.num_vertices());
  for (VertexId s = 0; s < g.num_vertices(); ++s)
    trees_.push_back(canonical_shortest_paths(g, s));
}

}  // namespace sparsify
