#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sparsify/hammock.hpp"
#include "sparsify/series_parallel.hpp"

namespace sparsify {

namespace {

std::string edge_str(const WeightedGraph& g, EdgeId e) {
  return "{" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + "}";
}

std::vector<std::vector<int>> hammocks_at(int n, const std::vector<Hammock>& hs) {
  std::vector<std::vector<int>> at(n);
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (VertexId v : hs[i].vertices()) at[v].push_back(static_cast<int>(i));
  return at;
}

void sort_unique(std::vector<VertexId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) up[std::max(a, b)] = std::min(a, b);
  }
};

void require_hammocks(const WeightedGraph& g, const RootedBfsTree& t,
                      const std::vector<Hammock>& hs, const std::string& stage) {
  std::vector<int> owner(g.num_edges(), -1);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (auto p = hammock_problem(g, t, hs[i]); !p.empty())
      throw LemmaViolation(stage, "every part is a hammock",
                           "hammock " + std::to_string(i) + ": " + p);
    for (EdgeId e : induced_edges(g, hs[i].vertices())) {
      if (owner[e] >= 0)
        throw LemmaViolation(stage, "hammocks are edge-disjoint",
                             "edge " + edge_str(g, e) + " in hammocks " +
                                 std::to_string(owner[e]) + " and " + std::to_string(i));
      owner[e] = static_cast<int>(i);
    }
  }
}

// Problems with the lca-respecting conditions between parents and
// children, and at the roots. `base` marks T0 when known.
std::vector<std::string> lca_respecting_problems(const RootedBfsTree& t, const HammockForest& f,
                                                 const std::vector<char>* base) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < f.hammocks.size(); ++j) {
    const Hammock& h = f.hammocks[j];
    VertexId top = t.lca(h.root_a, h.root_b);
    std::string tag = "hammock " + std::to_string(j) + ": ";
    int p = f.parent[j];
    if (p >= 0) {
      const Hammock& ph = f.hammocks[p];
      auto pv = ph.vertices();
      std::vector<VertexId> shared;
      auto hv = h.vertices();
      std::set_intersection(pv.begin(), pv.end(), hv.begin(), hv.end(), std::back_inserter(shared));
      if (shared != std::vector<VertexId>{h.root_a})
        out.push_back(tag + "shares more than its root with parent " + std::to_string(p));
      if (t.parent(h.root_b) != top)
        out.push_back(tag + "parent of root B is not the lca of the roots");
      if (!ph.contains(top) && top != t.lca(ph.root_a, ph.root_b))
        out.push_back(tag + "lca of the roots outside parent " + std::to_string(p));
    } else {
      if (t.parent(h.root_a) != top || t.parent(h.root_b) != top)
        out.push_back(tag + "root hammock roots are not children of their lca");
      if (base && (!(*base)[h.root_a] || !(*base)[top]))
        out.push_back(tag + "root hammock does not hang off T0");
    }
  }
  return out;
}

}  // namespace

std::vector<EdgeId> HammockDecomposition::t0_edges(const RootedBfsTree& t) const {
  std::vector<EdgeId> out;
  for (VertexId v : t0)
    if (v != t.root() && std::binary_search(t0.begin(), t0.end(), t.parent(v)))
      out.push_back(t.parent_edge(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Hammock> initial_hammocks(const WeightedGraph& g, const RootedBfsTree& t,
                                      const std::vector<LcaClass>& classes) {
  const std::string stage = "initial hammocks";
  std::vector<int> stamp(g.num_vertices(), -1);
  int round = 0;
  // union of tree paths between all points = climb from each to the top
  auto span = [&](const std::vector<VertexId>& pts, VertexId& top) {
    top = pts[0];
    for (VertexId p : pts) top = t.lca(top, p);
    ++round;
    std::vector<VertexId> out;
    for (VertexId p : pts) {
      for (VertexId x = p; stamp[x] != round; x = t.parent(x)) {
        stamp[x] = round;
        out.push_back(x);
        if (x == top) break;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<Hammock> out;
  for (const auto& c : classes) {
    std::vector<VertexId> side_a, side_b;
    for (EdgeId e : c.edges) {
      side_a.push_back(c.endpoint_a(g, t, e));
      side_b.push_back(c.endpoint_b(g, t, e));
    }
    sort_unique(side_a);
    sort_unique(side_b);
    Hammock h;
    h.class_id = c.id;
    h.tree_a = span(side_a, h.root_a);
    h.tree_b = span(side_b, h.root_b);
    h.stage = HammockStage::kInitial;
    // the class must be exactly the cross edges between the two trees
    std::vector<EdgeId> between;
    for (VertexId v : h.tree_a)
      for (const auto& inc : g.neighbors(v))
        if (!t.is_tree_edge(inc.edge) &&
            std::binary_search(h.tree_b.begin(), h.tree_b.end(), inc.to))
          between.push_back(inc.edge);
    std::sort(between.begin(), between.end());
    if (between != c.edges)
      throw LemmaViolation(stage, "class edges are the cross edges between the trees",
                           "class " + std::to_string(c.id));
    out.push_back(std::move(h));
  }
  require_hammocks(g, t, out, stage);
  for (const auto& h : out)
    for (VertexId v : h.vertices())
      if (v != h.root_a && v != h.root_b && !connected_below(g, t, v))
        throw LemmaViolation(stage, "hammock edges are connected below",
                             "tree edge into " + std::to_string(v) + " of hammock " +
                                 std::to_string(h.class_id));
  return out;
}

JoiningGraph hammock_joining_graph(const WeightedGraph& g, const RootedBfsTree& t,
                                   const std::vector<LcaClass>& classes,
                                   const std::vector<Hammock>& initial) {
  const std::string stage = "hammock-joining graph";
  int n = g.num_vertices();
  int k = static_cast<int>(initial.size());
  auto at = hammocks_at(n, initial);
  std::vector<char> marked(g.num_edges(), 0);
  std::vector<char> on_path(n, 0);
  int start = 0;

  auto tree_neighbors = [&](VertexId v) {
    std::vector<VertexId> out = t.children(v);
    if (t.parent(v) >= 0) out.push_back(t.parent(v));
    return out;
  };

  // Walks the tree away from a vertex of the start hammock; returns whether
  // some qualifying end lies at or beyond y, marking the edges on the way.
  auto walk = [&](auto&& self, VertexId y, VertexId from) -> bool {
    on_path[y] = 1;
    bool found = false;
    for (int j : at[y])
      if (j != start && !on_path[classes[j].lca]) found = true;
    for (VertexId z : tree_neighbors(y))
      if (z != from && z != classes[start].lca && self(self, z, y)) found = true;
    on_path[y] = 0;
    if (found) {
      VertexId child = t.parent(y) == from ? y : from;
      marked[t.parent_edge(child)] = 1;
    }
    return found;
  };

  for (start = 0; start < k; ++start)
    for (VertexId x : initial[start].vertices()) {
      on_path[x] = 1;
      for (VertexId y : tree_neighbors(x))
        if (y != classes[start].lca) walk(walk, y, x);
      on_path[x] = 0;
    }

  JoiningGraph out;
  std::vector<char> in_hammock(g.num_edges(), 0);
  for (const auto& h : initial)
    for (EdgeId e : induced_edges(g, h.vertices())) in_hammock[e] = 1;
  UnionFind uf(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!marked[e]) continue;
    out.edges.push_back(e);
    if (!connected_below(g, t, t.depth(g.edge(e).u) > t.depth(g.edge(e).v) ? g.edge(e).u
                                                                              : g.edge(e).v))
      throw LemmaViolation(stage, "joining edges are connected below", "edge " + edge_str(g, e));
    if (!in_hammock[e]) uf.join(g.edge(e).u, g.edge(e).v);
  }
  std::map<int, int> comp_index;
  for (EdgeId e : out.edges) {
    if (in_hammock[e]) continue;
    int rep = uf.find(g.edge(e).u);
    auto [it, fresh] = comp_index.try_emplace(rep, static_cast<int>(out.component_edges.size()));
    if (fresh) {
      out.component_edges.emplace_back();
      out.component_vertices.emplace_back();
    }
    out.component_edges[it->second].push_back(e);
    out.component_vertices[it->second].push_back(g.edge(e).u);
    out.component_vertices[it->second].push_back(g.edge(e).v);
  }
  for (auto& vs : out.component_vertices) sort_unique(vs);
  return out;
}

namespace {

VertexId highest(const RootedBfsTree& t, const std::vector<VertexId>& side) {
  VertexId best = side[0];
  for (VertexId v : side)
    if (t.depth(v) < t.depth(best)) best = v;
  return best;
}

std::vector<Hammock> apply_owners(const RootedBfsTree& t, const std::vector<Hammock>& initial, const JoiningGraph& joining,
                                  const std::vector<int>& owner, const std::string& stage) {
  std::vector<Hammock> hs = initial;
  for (std::size_t c = 0; c < owner.size(); ++c) {
    Hammock& h = hs[owner[c]];
    const auto& vs = joining.component_vertices[c];
    bool touches_a = false, touches_b = false;
    for (VertexId v : vs) {
      touches_a |= std::binary_search(initial[owner[c]].tree_a.begin(),
                                      initial[owner[c]].tree_a.end(), v);
      touches_b |= std::binary_search(initial[owner[c]].tree_b.begin(),
                                      initial[owner[c]].tree_b.end(), v);
    }
    if (touches_a == touches_b)
      throw LemmaViolation(stage, "joined components extend one tree",
                           "component " + std::to_string(c) + " of hammock " +
                               std::to_string(owner[c]));
    auto& side = touches_a ? h.tree_a : h.tree_b;
    side.insert(side.end(), vs.begin(), vs.end());
    sort_unique(side);
  }
  for (auto& h : hs) {
    h.root_a = highest(t, h.tree_a);
    h.root_b = highest(t, h.tree_b);
    h.stage = HammockStage::kJoined;
  }
  return hs;
}

// Root of each group of touching hammocks: highest lca, then lowest id.
std::vector<char> pick_roots(const WeightedGraph& g, const RootedBfsTree& t,
                             const std::vector<LcaClass>& classes,
                             const std::vector<Hammock>& hs) {
  int k = static_cast<int>(hs.size());
  UnionFind uf(k);
  auto at = hammocks_at(g.num_vertices(), hs);
  for (const auto& list : at)
    for (std::size_t i = 1; i < list.size(); ++i) uf.join(list[0], list[i]);
  std::map<int, int> best;
  for (int i = 0; i < k; ++i) {
    int grp = uf.find(i);
    auto it = best.find(grp);
    if (it == best.end() || t.depth(classes[i].lca) < t.depth(classes[it->second].lca))
      best[grp] = i;
  }
  std::vector<char> is_root(k, 0);
  for (auto [grp, i] : best) is_root[i] = 1;
  return is_root;
}

// Makes tree A the side holding the vertex shared with the parent.
void orient_children(HammockForest& f, const std::string& stage) {
  for (std::size_t j = 0; j < f.hammocks.size(); ++j) {
    int p = f.parent[j];
    if (p < 0) continue;
    auto hv = f.hammocks[j].vertices();
    auto pv = f.hammocks[p].vertices();
    std::vector<VertexId> shared;
    std::set_intersection(hv.begin(), hv.end(), pv.begin(), pv.end(), std::back_inserter(shared));
    if (shared.size() != 1)
      throw LemmaViolation(stage, "parent and child share exactly one vertex",
                           "hammocks " + std::to_string(p) + " and " + std::to_string(j) +
                               " share " + std::to_string(shared.size()));
    Hammock& h = f.hammocks[j];
    if (shared[0] == h.root_b) {
      std::swap(h.tree_a, h.tree_b);
      std::swap(h.root_a, h.root_b);
    } else if (shared[0] != h.root_a) {
      throw LemmaViolation(stage, "parent and child share the child's root",
                           "hammock " + std::to_string(j) + " meets its parent at " +
                               std::to_string(shared[0]));
    }
  }
}

}  // namespace

JoinedForest assign_components(const WeightedGraph& g, const RootedBfsTree& t,
                               const std::vector<LcaClass>& classes,
                               const std::vector<Hammock>& initial,
                               const JoiningGraph& joining) {
  const std::string stage = "component assignment";
  int k = static_cast<int>(initial.size());
  auto at = hammocks_at(g.num_vertices(), initial);
  std::size_t comps = joining.component_vertices.size();
  std::vector<std::vector<int>> touching(comps);
  std::vector<int> owner(comps, -1);
  for (std::size_t c = 0; c < comps; ++c) {
    const auto& vs = joining.component_vertices[c];
    for (VertexId v : vs) touching[c].insert(touching[c].end(), at[v].begin(), at[v].end());
    std::sort(touching[c].begin(), touching[c].end());
    touching[c].erase(std::unique(touching[c].begin(), touching[c].end()), touching[c].end());
    for (int i : touching[c])
      if (!std::binary_search(vs.begin(), vs.end(), classes[i].lca)) {
        owner[c] = i;
        break;
      }
    if (owner[c] < 0)
      throw LemmaViolation(stage, "a valid assignment exists",
                           "component " + std::to_string(c) + " contains every candidate lca");
  }

  HammockForest first;
  first.hammocks = apply_owners(t, initial, joining, owner, stage);
  auto roots = pick_roots(g, t, classes, first.hammocks);
  first.parent = hammock_parents(g.num_vertices(), first.hammocks, roots, stage);

  // move every component to the unique highest hammock it touches
  for (std::size_t c = 0; c < comps; ++c) {
    std::vector<int> tops;
    for (int i : touching[c]) {
      bool dominated = false;
      for (int j : touching[c])
        if (j != i && first.is_ancestor(j, i)) dominated = true;
      if (!dominated) tops.push_back(i);
    }
    if (tops.size() != 1)
      throw LemmaViolation(stage, "unique local maximum",
                           "component " + std::to_string(c) + " has " +
                               std::to_string(tops.size()) + " maximal hammocks");
    owner[c] = tops[0];
    if (std::binary_search(joining.component_vertices[c].begin(),
                           joining.component_vertices[c].end(), classes[tops[0]].lca))
      throw LemmaViolation(stage, "local maximum assignment is valid",
                           "component " + std::to_string(c) + " holds the lca of hammock " +
                               std::to_string(tops[0]));
  }

  JoinedForest out;
  out.owner = owner;
  out.forest.hammocks = apply_owners(t, initial, joining, owner, stage);
  require_hammocks(g, t, out.forest.hammocks, stage);
  roots = pick_roots(g, t, classes, out.forest.hammocks);
  out.forest.parent = hammock_parents(g.num_vertices(), out.forest.hammocks, roots, stage);
  orient_children(out.forest, stage);
  for (int j = 0; j < k; ++j) {
    int p = out.forest.parent[j];
    if (p >= 0 && !t.is_ancestor(classes[p].lca, classes[j].lca))
      throw LemmaViolation(stage, "descendant hammocks have descendant lcas",
                           "hammock " + std::to_string(j) + " under " + std::to_string(p));
  }
  return out;
}

HammockForest extend_lca_paths(const WeightedGraph& g, const RootedBfsTree& t,
                               const std::vector<LcaClass>& classes,
                               const HammockForest& joined) {
  const std::string stage = "lca path extension";
  HammockForest f = joined;
  auto at = hammocks_at(g.num_vertices(), joined.hammocks);
  std::vector<int> claimed(g.num_vertices(), -1);
  auto extend = [&](int j, std::vector<VertexId>& side, VertexId& top) {
    VertexId l = classes[j].lca;
    for (VertexId x = t.parent(top); x != l; x = t.parent(x)) {
      if (x < 0)
        throw LemmaViolation(stage, "lca is above the roots", "hammock " + std::to_string(j));
      if (!at[x].empty() || claimed[x] >= 0)
        throw LemmaViolation(stage, "lca paths are disjoint",
                             "vertex " + std::to_string(x) + " on the lca path of hammock " +
                                 std::to_string(j));
      claimed[x] = j;
      side.push_back(x);
      top = x;
    }
    sort_unique(side);
  };
  for (std::size_t j = 0; j < f.hammocks.size(); ++j) {
    Hammock& h = f.hammocks[j];
    extend(static_cast<int>(j), h.tree_b, h.root_b);
    if (f.parent[j] < 0) extend(static_cast<int>(j), h.tree_a, h.root_a);
    h.stage = HammockStage::kLcaExtended;
  }
  require_hammocks(g, t, f.hammocks, stage);
  std::vector<char> roots(f.hammocks.size(), 0);
  for (int r : f.roots()) roots[r] = 1;
  if (hammock_parents(g.num_vertices(), f.hammocks, roots, stage) != f.parent)
    throw LemmaViolation(stage, "forest shape is unchanged", "parent pointers moved");
  auto problems = lca_respecting_problems(t, f, nullptr);
  if (!problems.empty()) throw LemmaViolation(stage, "lca-respecting forest", problems[0]);
  return f;
}

HammockDecomposition attach_dangling_trees(const WeightedGraph& g, const RootedBfsTree& t,
                                           const std::vector<LcaClass>& classes,
                                           const HammockForest& extended) {
  (void)classes;
  const std::string stage = "dangling trees";
  int n = g.num_vertices();
  HammockDecomposition hd;
  hd.root = t.root();
  hd.forest = extended;
  auto& hs = hd.forest.hammocks;

  std::vector<char> blocked(g.num_edges(), 0);
  for (const auto& h : hs) {
    EdgeId e = t.parent_edge(h.root_b);
    if (e < 0) throw LemmaViolation(stage, "root B has a tree parent", "hammock " + std::to_string(h.class_id));
    hd.parent_edges.push_back(e);
    blocked[e] = 1;
    for (EdgeId he : induced_edges(g, h.vertices())) blocked[he] = 1;
  }
  std::sort(hd.parent_edges.begin(), hd.parent_edges.end());

  UnionFind uf(n);
  std::vector<char> has_edge(n, 0);
  for (EdgeId e : t.tree_edges())
    if (!blocked[e]) {
      uf.join(g.edge(e).u, g.edge(e).v);
      has_edge[g.edge(e).u] = has_edge[g.edge(e).v] = 1;
    }
  std::map<int, std::vector<VertexId>> groups;
  for (VertexId v = 0; v < n; ++v)
    if (has_edge[v] || v == t.root()) groups[uf.find(v)].push_back(v);

  auto at = hammocks_at(n, hs);
  for (auto& [rep, members] : groups) {
    if (uf.find(t.root()) == rep) {
      hd.t0 = members;
      continue;
    }
    VertexId high = members[0];
    for (VertexId v : members)
      if (t.depth(v) < t.depth(high)) high = v;
    if (at[high].empty())
      throw LemmaViolation(stage, "dangling trees hang off a hammock",
                           "tree topped by " + std::to_string(high));
    Hammock& h = hs[at[high][0]];
    bool on_a = std::binary_search(h.tree_a.begin(), h.tree_a.end(), high);
    auto& side = on_a ? h.tree_a : h.tree_b;
    side.insert(side.end(), members.begin(), members.end());
    sort_unique(side);
    (on_a ? h.root_a : h.root_b) = highest(t, side);
  }

  std::vector<char> covered(n, 0);
  for (VertexId v : hd.t0) covered[v] = 1;
  for (const auto& h : hs)
    for (VertexId v : h.vertices()) covered[v] = 1;
  for (VertexId v = 0; v < n; ++v)
    if (!covered[v])
      throw LemmaViolation(stage, "every vertex is placed", "vertex " + std::to_string(v));

  std::vector<char> base(n, 0);
  for (VertexId v : hd.t0) base[v] = 1;
  std::vector<char> designated(hs.size(), 0);
  for (int r : extended.roots())
    if (base[hs[r].root_a]) designated[r] = 1;
  hd.forest.parent = hammock_parents(n, hs, designated, stage);
  orient_children(hd.forest, stage);
  for (auto& h : hs) h.stage = HammockStage::kFinal;
  require_hammocks(g, t, hs, stage);
  auto problems = lca_respecting_problems(t, hd.forest, &base);
  if (!problems.empty()) throw LemmaViolation(stage, "lca-respecting forest", problems[0]);
  return hd;
}

HammockPipeline run_hammock_pipeline(const WeightedGraph& g, VertexId root) {
  if (!g.has_unit_weights()) throw GraphError("hammock decomposition needs unit weights");
  if (!is_series_parallel(g)) throw GraphError("graph is not series-parallel");
  HammockPipeline p;
  p.tree = build_bfs_tree(g, root);
  p.classes = lca_equivalence_classes(g, p.tree);
  p.initial = initial_hammocks(g, p.tree, p.classes);
  p.joining = hammock_joining_graph(g, p.tree, p.classes, p.initial);
  p.joined = assign_components(g, p.tree, p.classes, p.initial, p.joining);
  p.extended = extend_lca_paths(g, p.tree, p.classes, p.joined.forest);
  p.result = attach_dangling_trees(g, p.tree, p.classes, p.extended);
  return p;
}

HammockDecomposition build_hammock_decomposition(const WeightedGraph& g, VertexId root) {
  return run_hammock_pipeline(g, root).result;
}

// exposed for the verifier
std::vector<std::string> hammock_lca_problems(const RootedBfsTree& t, const HammockForest& f,
                                              const std::vector<char>& base) {
  return lca_respecting_problems(t, f, &base);
}

}  // namespace sparsify
