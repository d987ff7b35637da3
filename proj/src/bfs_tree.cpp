#include "sparsify/bfs_tree.hpp"

#include <algorithm>

#include "sparsify/shortest_paths.hpp"

namespace sparsify {

RootedBfsTree build_bfs_tree(const WeightedGraph& g, VertexId root) {
  int n = g.num_vertices();
  if (root < 0 || root >= n)
    throw GraphError("root out of range: " + std::to_string(root));
  auto spt = canonical_shortest_paths(g, root);
  for (VertexId v = 0; v < n; ++v)
    if (!spt.reaches(v))
      throw GraphError("graph is disconnected: vertex " + std::to_string(v) +
                       " unreachable from root " + std::to_string(root));

  RootedBfsTree t;
  t.root_ = root;
  t.parent_ = spt.parent;
  t.parent_edge_ = spt.parent_edge;
  t.depth_ = spt.dist;
  t.hops_ = spt.hops;
  t.max_depth_ = n ? *std::max_element(t.depth_.begin(), t.depth_.end()) : 0;
  t.children_.assign(n, {});
  for (VertexId v = 0; v < n; ++v)
    if (t.parent_[v] >= 0) t.children_[t.parent_[v]].push_back(v);
  t.order_.resize(n);
  for (VertexId v = 0; v < n; ++v) t.order_[v] = v;
  std::sort(t.order_.begin(), t.order_.end(), [&](VertexId a, VertexId b) {
    return t.depth_[a] != t.depth_[b] ? t.depth_[a] < t.depth_[b] : a < b;
  });

  t.tree_edge_.assign(g.num_edges(), 0);
  for (VertexId v = 0; v < n; ++v)
    if (t.parent_edge_[v] >= 0) t.tree_edge_[t.parent_edge_[v]] = 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    (t.tree_edge_[e] ? t.tree_edges_ : t.cross_edges_).push_back(e);

  // iterative dfs for entry/exit times and the Euler tour
  t.tin_.assign(n, 0);
  t.tout_.assign(n, 0);
  t.first_.assign(n, 0);
  int clock = 0;
  std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
  t.tin_[root] = clock++;
  t.first_[root] = 0;
  t.euler_.push_back(root);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < t.children_[v].size()) {
      VertexId c = t.children_[v][next++];
      t.tin_[c] = clock++;
      t.first_[c] = static_cast<int>(t.euler_.size());
      t.euler_.push_back(c);
      stack.push_back({c, 0});
    } else {
      t.tout_[v] = clock++;
      stack.pop_back();
      if (!stack.empty()) t.euler_.push_back(stack.back().first);
    }
  }

  int len = static_cast<int>(t.euler_.size());
  t.sparse_.push_back(std::vector<int>(len));
  for (int i = 0; i < len; ++i) t.sparse_[0][i] = t.euler_[i];
  for (int k = 1; (1 << k) <= len; ++k) {
    const auto& prev = t.sparse_[k - 1];
    std::vector<int> row(len - (1 << k) + 1);
    for (std::size_t i = 0; i < row.size(); ++i) {
      VertexId a = prev[i], b = prev[i + (1 << (k - 1))];
      row[i] = t.hops_[a] <= t.hops_[b] ? a : b;
    }
    t.sparse_.push_back(std::move(row));
  }
  return t;
}

VertexId RootedBfsTree::lca(VertexId a, VertexId b) const {
  int l = first_[a], r = first_[b];
  if (l > r) std::swap(l, r);
  int k = 31 - __builtin_clz(static_cast<unsigned>(r - l + 1));
  VertexId x = sparse_[k][l], y = sparse_[k][r - (1 << k) + 1];
  return hops_[x] <= hops_[y] ? x : y;
}

VertexId RootedBfsTree::child_toward(VertexId anc, VertexId v) const {
  VertexId x = v;
  while (parent_[x] != anc) {
    if (parent_[x] < 0)
      throw GraphError(std::to_string(anc) + " is not a strict ancestor of " +
                       std::to_string(v));
    x = parent_[x];
  }
  return x;
}

Path RootedBfsTree::tree_path(VertexId a, VertexId b) const {
  VertexId top = lca(a, b);
  Path up, down;
  for (VertexId x = a; x != top; x = parent_[x]) up.push_back(x);
  up.push_back(top);
  for (VertexId x = b; x != top; x = parent_[x]) down.push_back(x);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace sparsify
