#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "sparsify/hammock.hpp"

namespace sparsify {

VertexId LcaClass::endpoint_a(const WeightedGraph& g, const RootedBfsTree& t, EdgeId e) const {
  const Edge& ed = g.edge(e);
  return t.is_ancestor(child_a, ed.u) ? ed.u : ed.v;
}

VertexId LcaClass::endpoint_b(const WeightedGraph& g, const RootedBfsTree& t, EdgeId e) const {
  return g.edge(e).other(endpoint_a(g, t, e));
}

namespace {

bool strictly_below(const RootedBfsTree& t, VertexId x, VertexId top) {
  return x != top && t.is_ancestor(top, x);
}

}  // namespace

bool lca_equivalent(const WeightedGraph& g, const RootedBfsTree& t, EdgeId e1, EdgeId e2) {
  const Edge& a = g.edge(e1);
  const Edge& b = g.edge(e2);
  VertexId l = t.lca(a.u, a.v);
  if (l != t.lca(b.u, b.v)) return false;
  auto below = [&](VertexId x, VertexId y) { return strictly_below(t, t.lca(x, y), l); };
  return (below(a.u, b.u) && below(a.v, b.v)) || (below(a.u, b.v) && below(a.v, b.u));
}

std::vector<LcaClass> lca_equivalence_classes(const WeightedGraph& g, const RootedBfsTree& t) {
  std::vector<LcaClass> classes;
  std::map<std::tuple<VertexId, VertexId, VertexId>, int> index;
  for (EdgeId e : t.cross_edges()) {
    const Edge& ed = g.edge(e);
    VertexId l = t.lca(ed.u, ed.v);
    if (l == ed.u || l == ed.v)
      throw GraphError("cross edge {" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
                       "} joins a vertex to its ancestor; unit weights required");
    VertexId cu = t.child_toward(l, ed.u), cv = t.child_toward(l, ed.v);
    auto key = std::make_tuple(l, std::min(cu, cv), std::max(cu, cv));
    auto it = index.find(key);
    if (it == index.end()) {
      LcaClass c;
      c.id = static_cast<int>(classes.size());
      c.lca = l;
      c.child_a = cu;
      c.child_b = cv;
      c.height = t.height(l);
      index[key] = c.id;
      classes.push_back(c);
      it = index.find(key);
    }
    classes[it->second].edges.push_back(e);
  }
  return classes;
}

bool connected_below(const WeightedGraph& g, const RootedBfsTree& t, VertexId child) {
  VertexId up = t.parent(child);
  if (up < 0) throw GraphError("connected_below needs a non-root vertex");
  auto allowed = [&](VertexId x) { return !t.is_ancestor(up, x) || t.is_ancestor(child, x); };
  if (!allowed(t.root())) return false;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> stack{t.root()};
  seen[t.root()] = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    if (t.is_ancestor(child, x)) return true;
    for (const auto& inc : g.neighbors(x))
      if (!seen[inc.to] && allowed(inc.to)) {
        seen[inc.to] = 1;
        stack.push_back(inc.to);
      }
  }
  return false;
}

const char* stage_name(HammockStage stage) {
  switch (stage) {
    case HammockStage::kInitial: return "initial";
    case HammockStage::kJoined: return "joined";
    case HammockStage::kLcaExtended: return "lca_extended";
    case HammockStage::kFinal: return "final";
  }
  return "?";
}

std::vector<VertexId> Hammock::vertices() const {
  std::vector<VertexId> out;
  std::merge(tree_a.begin(), tree_a.end(), tree_b.begin(), tree_b.end(), std::back_inserter(out));
  return out;
}

bool Hammock::contains(VertexId v) const {
  return std::binary_search(tree_a.begin(), tree_a.end(), v) ||
         std::binary_search(tree_b.begin(), tree_b.end(), v);
}

std::vector<EdgeId> induced_edges(const WeightedGraph& g, const std::vector<VertexId>& vertices) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : vertices) in[v] = 1;
  std::vector<EdgeId> out;
  for (VertexId v : vertices)
    for (const auto& inc : g.neighbors(v))
      if (in[inc.to] && v < inc.to) out.push_back(inc.edge);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Empty when `side` is a connected subtree of t topped by `top`.
std::string subtree_problem(const RootedBfsTree& t, const std::vector<VertexId>& side,
                            VertexId top, const char* label) {
  if (side.empty()) return std::string(label) + " is empty";
  std::set<VertexId> members(side.begin(), side.end());
  if (!members.count(top)) return std::string(label) + " does not contain its root";
  for (VertexId v : side) {
    bool parent_inside = t.parent(v) >= 0 && members.count(t.parent(v));
    if (v == top && parent_inside)
      return std::string(label) + " root " + std::to_string(v) + " is not its highest vertex";
    if (v != top && !parent_inside)
      return std::string(label) + " is not connected in the tree at " + std::to_string(v);
  }
  return {};
}

}  // namespace

std::string hammock_problem(const WeightedGraph& g, const RootedBfsTree& t, const Hammock& h) {
  if (auto p = subtree_problem(t, h.tree_a, h.root_a, "tree A"); !p.empty()) return p;
  if (auto p = subtree_problem(t, h.tree_b, h.root_b, "tree B"); !p.empty()) return p;
  std::vector<VertexId> both;
  std::set_intersection(h.tree_a.begin(), h.tree_a.end(), h.tree_b.begin(), h.tree_b.end(),
                        std::back_inserter(both));
  if (!both.empty()) return "trees share vertex " + std::to_string(both[0]);
  if (t.is_ancestor(h.root_a, h.root_b) || t.is_ancestor(h.root_b, h.root_a))
    return "roots " + std::to_string(h.root_a) + " and " + std::to_string(h.root_b) +
           " are related";
  for (VertexId v : h.tree_a)
    for (const auto& inc : g.neighbors(v))
      if (!t.is_tree_edge(inc.edge) &&
          std::binary_search(h.tree_b.begin(), h.tree_b.end(), inc.to))
        return {};
  return "no cross edge between the trees";
}

std::vector<int> HammockForest::roots() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (parent[i] < 0) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> HammockForest::children(int i) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < parent.size(); ++j)
    if (parent[j] == i) out.push_back(static_cast<int>(j));
  return out;
}

bool HammockForest::is_ancestor(int anc, int of) const {
  for (int x = of; x >= 0; x = parent[x])
    if (x == anc) return true;
  return false;
}

std::vector<int> HammockForest::bfs_order() const {
  std::vector<int> order = roots();
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : children(order[i])) order.push_back(c);
  return order;
}

std::vector<int> hammock_parents(int num_vertices, const std::vector<Hammock>& hammocks,
                                 const std::vector<char>& designated_root,
                                 const std::string& stage) {
  int k = static_cast<int>(hammocks.size());
  std::vector<std::vector<int>> at(num_vertices);
  std::vector<std::vector<VertexId>> verts(k);
  for (int i = 0; i < k; ++i) {
    verts[i] = hammocks[i].vertices();
    for (VertexId v : verts[i]) at[v].push_back(i);
  }
  std::vector<int> parent(k, -1);
  std::vector<int> group(k, -1);
  std::vector<char> vertex_seen(num_vertices, 0);
  for (int r = 0; r < k; ++r) {
    if (!designated_root[r]) continue;
    if (group[r] >= 0)
      throw LemmaViolation(stage, "one root per tree of hammocks",
                           "hammocks " + std::to_string(group[r]) + " and " +
                               std::to_string(r) + " are both roots of one tree");
    group[r] = r;
    std::deque<int> queue{r};
    while (!queue.empty()) {
      int h = queue.front();
      queue.pop_front();
      for (VertexId v : verts[h]) {
        if (vertex_seen[v]) continue;
        vertex_seen[v] = 1;
        for (int other : at[v]) {
          if (group[other] >= 0) continue;
          if (designated_root[other])
            throw LemmaViolation(stage, "one root per tree of hammocks",
                                 "hammocks " + std::to_string(r) + " and " +
                                     std::to_string(other) + " are both roots of one tree");
          group[other] = r;
          parent[other] = h;
          queue.push_back(other);
        }
      }
    }
  }
  for (int i = 0; i < k; ++i)
    if (group[i] < 0)
      throw LemmaViolation(stage, "one root per tree of hammocks",
                           "hammock " + std::to_string(i) + " has no root in its tree");
  return parent;
}

}  // namespace sparsify
