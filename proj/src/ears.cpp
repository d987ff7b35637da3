#include "sparsify/ears.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sparsify/bfs_tree.hpp"

namespace sparsify {

bool is_biconnected(const WeightedGraph& g) {
  if (g.num_vertices() < 3 || !is_connected(g)) return false;
  auto blocks = biconnected_blocks(g);
  return std::none_of(blocks.articulation.begin(), blocks.articulation.end(),
                      [](char c) { return c; });
}

EarDecomposition nested_ear_decomposition(const WeightedGraph& g,
                                          const HammockDecomposition& hd) {
  const std::string stage = "ear decomposition";
  if (!is_biconnected(g)) throw GraphError("ear decomposition needs a 2-vertex-connected graph");
  auto t = build_bfs_tree(g, hd.root);
  int n = g.num_vertices();
  std::vector<char> placed(n, 0), used(g.num_edges(), 0);
  EarDecomposition out;

  // siblings with the highest lca go first; ties by id
  std::vector<int> order = hd.forest.roots();
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto kids = hd.forest.children(order[k]);
    std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) {
      const auto& ha = hd.forest.hammocks[a];
      const auto& hb = hd.forest.hammocks[b];
      return t.depth(t.lca(ha.root_a, ha.root_b)) < t.depth(t.lca(hb.root_a, hb.root_b));
    });
    order.insert(order.end(), kids.begin(), kids.end());
  }
  for (int i : order) {
    const Hammock& h = hd.forest.hammocks[i];
    std::vector<EdgeId> remaining;
    for (EdgeId e : induced_edges(g, h.vertices()))
      if (!t.is_tree_edge(e)) remaining.push_back(e);
    auto side_a = [&](EdgeId e) {
      VertexId u = g.edge(e).u;
      return std::binary_search(h.tree_a.begin(), h.tree_a.end(), u) ? u : g.edge(e).v;
    };
    auto strictly_above = [&](VertexId x, VertexId y) { return x != y && t.is_ancestor(x, y); };
    while (!remaining.empty()) {
      EdgeId pick = -1;
      for (EdgeId e : remaining) {
        VertexId u = side_a(e), v = g.edge(e).other(u);
        bool blocked = false;
        for (EdgeId f : remaining) {
          if (f == e) continue;
          VertexId fu = side_a(f), fv = g.edge(f).other(fu);
          if (strictly_above(fu, u) && strictly_above(fv, v)) blocked = true;
        }
        if (!blocked) {
          pick = e;
          break;
        }
      }
      if (pick < 0)
        throw LemmaViolation(stage, "a topmost cross edge exists",
                             "hammock " + std::to_string(i));
      remaining.erase(std::find(remaining.begin(), remaining.end(), pick));

      VertexId u = side_a(pick), v = g.edge(pick).other(u);
      VertexId top = t.lca(u, v);
      auto climb = [&](VertexId from) {
        Path seq{from};
        for (VertexId x = from; !placed[x] && x != top;) {
          x = t.parent(x);
          seq.push_back(x);
        }
        return seq;
      };
      Path up_u = climb(u), up_v = climb(v);
      Path ear(up_u.rbegin(), up_u.rend());
      ear.insert(ear.end(), up_v.begin(), up_v.end());
      if (!out.ears.empty() && ear.front() == ear.back())
        throw LemmaViolation(stage, "later ears are open",
                             "ear through cross edge {" + std::to_string(u) + "," +
                                 std::to_string(v) + "} closes on itself");
      for (EdgeId e : path_edges(g, ear)) {
        if (used[e])
          throw LemmaViolation(stage, "ears are edge-disjoint",
                               "edge {" + std::to_string(g.edge(e).u) + "," +
                                   std::to_string(g.edge(e).v) + "} reused");
        used[e] = 1;
      }
      for (VertexId x : ear) placed[x] = 1;
      out.ears.push_back(std::move(ear));
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!used[e])
      throw LemmaViolation(stage, "ears cover every edge",
                           "edge {" + std::to_string(g.edge(e).u) + "," +
                               std::to_string(g.edge(e).v) + "} left over");

  // parent ear: earliest ear holding both endpoints
  out.parent_ear.assign(out.ears.size(), -1);
  std::vector<std::set<VertexId>> members;
  for (std::size_t k = 0; k < out.ears.size(); ++k) {
    if (k > 0) {
      for (std::size_t j = 0; j < k; ++j)
        if (members[j].count(out.ears[k].front()) && members[j].count(out.ears[k].back())) {
          out.parent_ear[k] = static_cast<int>(j);
          break;
        }
    }
    members.emplace_back(out.ears[k].begin(), out.ears[k].end());
  }
  return out;
}

Report verify_ear_decomposition(const WeightedGraph& g, const EarDecomposition& ed,
                                const HammockDecomposition* hd) {
  Report report;
  auto& partition = report.add("ears partition the edges");
  auto& open = report.add("open");
  auto& tree = report.add("tree ear decomposition");
  auto& nested = report.add("nested");
  int n = g.num_vertices();

  std::vector<int> uses(g.num_edges(), 0);
  std::vector<std::vector<EdgeId>> ear_edges;
  for (const auto& ear : ed.ears) {
    try {
      ear_edges.push_back(path_edges(g, ear));
    } catch (const GraphError& e) {
      partition.fail(e.what());
      return report;
    }
    for (EdgeId e : ear_edges.back()) ++uses[e];
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (uses[e] != 1)
      partition.fail("edge {" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) +
                     "} used " + std::to_string(uses[e]) + " times");

  std::vector<char> seen(n, 0);
  std::vector<std::map<VertexId, int>> position(ed.ears.size());
  for (std::size_t k = 0; k < ed.ears.size(); ++k) {
    const Path& ear = ed.ears[k];
    std::string tag = "ear " + std::to_string(k) + ": ";
    if (ear.size() < 2) {
      open.fail(tag + "too short");
      continue;
    }
    std::set<VertexId> inner(ear.begin() + 1, ear.end() - 1);
    if (inner.size() != ear.size() - 2 || inner.count(ear.front()) || inner.count(ear.back()))
      open.fail(tag + "repeats a vertex");
    if (k == 0) {
      if (ear.front() != ear.back()) open.fail(tag + "first ear is not a cycle");
    } else {
      if (ear.front() == ear.back()) open.fail(tag + "endpoints coincide");
      if (!seen[ear.front()] || !seen[ear.back()]) open.fail(tag + "endpoint not on an earlier ear");
      for (VertexId x : inner)
        if (seen[x]) open.fail(tag + "inner vertex " + std::to_string(x) + " already placed");
    }
    for (std::size_t p = 0; p < ear.size(); ++p) position[k].try_emplace(ear[p], static_cast<int>(p));
    for (VertexId x : ear) seen[x] = 1;
  }

  if (ed.parent_ear.size() != ed.ears.size()) {
    tree.fail("parent list length differs from ear count");
    return report;
  }
  std::map<int, std::vector<std::pair<int, int>>> intervals;
  for (std::size_t k = 1; k < ed.ears.size(); ++k) {
    int j = ed.parent_ear[k];
    const Path& ear = ed.ears[k];
    if (j < 0 || j >= static_cast<int>(k) || !position[j].count(ear.front()) ||
        !position[j].count(ear.back())) {
      tree.fail("ear " + std::to_string(k) + " has no earlier ear holding both endpoints");
      continue;
    }
    int a = position[j][ear.front()], b = position[j][ear.back()];
    intervals[j].push_back({std::min(a, b), std::max(a, b)});
  }
  for (const auto& [j, list] : intervals)
    for (std::size_t x = 0; x < list.size(); ++x)
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        auto [a1, b1] = list[x];
        auto [a2, b2] = list[y];
        if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1))
          nested.fail("ears nested in ear " + std::to_string(j) + " cross");
      }

  if (!hd) return report;
  auto& shape = report.add("one cross edge between two tree climbs");
  auto& ep_once = report.add("at most one E_p edge per ear");
  auto& same_lca = report.add("ears off E_p share their lca per component");
  auto t = build_bfs_tree(g, hd->root);
  std::vector<char> is_ep(g.num_edges(), 0);
  for (EdgeId e : hd->parent_edges) is_ep[e] = 1;
  std::vector<VertexId> ear_lca(ed.ears.size(), -1);
  std::vector<char> has_ep(ed.ears.size(), 0);
  for (std::size_t k = 0; k < ed.ears.size() && k < ear_edges.size(); ++k) {
    const Path& ear = ed.ears[k];
    const auto& edges = ear_edges[k];
    int cross_at = -1, cross_count = 0, ep_count = 0;
    for (std::size_t p = 0; p < edges.size(); ++p) {
      if (!t.is_tree_edge(edges[p])) {
        cross_at = static_cast<int>(p);
        ++cross_count;
      }
      if (is_ep[edges[p]]) ++ep_count;
    }
    std::string tag = "ear " + std::to_string(k) + ": ";
    if (cross_count != 1) {
      shape.fail(tag + std::to_string(cross_count) + " cross edges");
      continue;
    }
    for (int p = 0; p < cross_at; ++p)
      if (t.parent(ear[p + 1]) != ear[p]) shape.fail(tag + "left part is not a climb");
    for (std::size_t p = cross_at + 1; p < edges.size(); ++p)
      if (t.parent(ear[p]) != ear[p + 1]) shape.fail(tag + "right part is not a climb");
    if (ep_count > 1) ep_once.fail(tag + std::to_string(ep_count) + " E_p edges");
    has_ep[k] = ep_count > 0;
    const Edge& c = g.edge(edges[cross_at]);
    ear_lca[k] = t.lca(c.u, c.v);
  }
  // components of the ear nesting tree once the E_p ears are gone
  std::vector<int> group(ed.ears.size());
  for (std::size_t k = 0; k < ed.ears.size(); ++k) {
    int j = ed.parent_ear[k];
    group[k] = (j >= 0 && !has_ep[k] && !has_ep[j]) ? group[j] : static_cast<int>(k);
  }
  std::map<int, VertexId> lca_of;
  for (std::size_t k = 0; k < ed.ears.size(); ++k) {
    if (has_ep[k] || ear_lca[k] < 0) continue;
    auto [it, fresh] = lca_of.try_emplace(group[k], ear_lca[k]);
    if (!fresh && it->second != ear_lca[k])
      same_lca.fail("ear " + std::to_string(k) + " has lca " + std::to_string(ear_lca[k]) +
                    ", its component uses " + std::to_string(it->second));
  }
  return report;
}

}  // namespace sparsify
