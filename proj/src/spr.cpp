#include "sparsify/spr.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "sparsify/shortest_paths.hpp"

namespace sparsify {

namespace {

void check_instance(const SprInstance& inst) {
  int n = inst.graph.num_vertices();
  if (inst.terminals.empty()) throw GraphError("spr: no terminals");
  std::set<VertexId> seen;
  for (VertexId t : inst.terminals) {
    if (t < 0 || t >= n) throw GraphError("spr: terminal " + std::to_string(t) + " out of range");
    if (!seen.insert(t).second) throw GraphError("spr: terminal " + std::to_string(t) + " repeated");
  }
  if (!is_connected(inst.graph)) throw GraphError("spr: graph is disconnected");
}

}  // namespace

int SprResult::index_of(VertexId terminal) const {
  auto it = std::lower_bound(terminals.begin(), terminals.end(), terminal);
  if (it == terminals.end() || *it != terminal) return -1;
  return static_cast<int>(it - terminals.begin());
}

SprResult voronoi_spr_minor(const SprInstance& inst) {
  check_instance(inst);
  const auto& g = inst.graph;
  int n = g.num_vertices();
  SprResult out;
  out.terminals = inst.terminals;
  std::sort(out.terminals.begin(), out.terminals.end());
  int k = static_cast<int>(out.terminals.size());

  // multi-source Dijkstra on (distance, terminal id)
  std::vector<Weight> dist(n, kUnreachable);
  std::vector<int> cell(n, -1);
  using Item = std::tuple<Weight, int, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (int c = 0; c < k; ++c) {
    dist[out.terminals[c]] = 0;
    cell[out.terminals[c]] = c;
    queue.push({0, c, out.terminals[c]});
  }
  while (!queue.empty()) {
    auto [d, c, v] = queue.top();
    queue.pop();
    if (d != dist[v] || c != cell[v]) continue;
    for (const auto& inc : g.neighbors(v)) {
      Weight nd = d + g.edge(inc.edge).w;
      VertexId x = inc.to;
      if (dist[x] == kUnreachable || nd < dist[x] || (nd == dist[x] && c < cell[x])) {
        dist[x] = nd;
        cell[x] = c;
        queue.push({nd, c, x});
      }
    }
  }

  std::vector<std::vector<Weight>> term_dist(k);
  for (int c = 0; c < k; ++c) term_dist[c] = distances_from(g, out.terminals[c]);
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) {
    int a = cell[e.u], b = cell[e.v];
    if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b, term_dist[a][out.terminals[b]]});
  out.minor = WeightedGraph::from_edges(k, std::move(edges));
  out.witness.resize(n);
  for (VertexId v = 0; v < n; ++v) out.witness[v] = out.terminals[cell[v]];
  return out;
}

Report verify_minor(const SprInstance& inst, const SprResult& result) {
  Report report;
  auto& cells = report.add("supernodes are connected, disjoint and hold their terminal");
  auto& support = report.add("minor edges are supported by graph edges");
  auto& dominate = report.add("minor distances dominate graph distances");
  const auto& g = inst.graph;
  int n = g.num_vertices();
  int k = static_cast<int>(result.terminals.size());
  if (static_cast<int>(result.witness.size()) != n || result.minor.num_vertices() != k ||
      !std::is_sorted(result.terminals.begin(), result.terminals.end())) {
    cells.fail("shape mismatch");
    return report;
  }
  std::set<VertexId> expected(inst.terminals.begin(), inst.terminals.end());
  if (expected != std::set<VertexId>(result.terminals.begin(), result.terminals.end())) {
    cells.fail("terminal set differs from the instance");
    return report;
  }
  // disjointness is automatic with one entry per vertex; what can go wrong is
  // a label that is not a terminal
  std::vector<int> cell(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (result.witness[v] < 0) continue;
    cell[v] = result.index_of(result.witness[v]);
    if (cell[v] < 0)
      cells.fail("vertex " + std::to_string(v) + " assigned to non-terminal " +
                 std::to_string(result.witness[v]));
  }
  for (int c = 0; c < k; ++c) {
    VertexId t = result.terminals[c];
    if (cell[t] != c) cells.fail("terminal " + std::to_string(t) + " outside its supernode");
    std::vector<char> keep(n, 0);
    for (VertexId v = 0; v < n; ++v) keep[v] = cell[v] == c;
    keep[t] = 1;
    auto label = components_within(g, keep);
    for (VertexId v = 0; v < n; ++v)
      if (keep[v] && label[v] != label[t]) {
        cells.fail("supernode of terminal " + std::to_string(t) + " is disconnected");
        break;
      }
  }

  std::set<std::pair<int, int>> adjacent;
  for (const auto& e : g.edges()) {
    int a = cell[e.u], b = cell[e.v];
    if (a >= 0 && b >= 0 && a != b) adjacent.insert({std::min(a, b), std::max(a, b)});
  }
  std::set<std::pair<int, int>> minor_pairs;
  for (const auto& e : result.minor.edges()) {
    minor_pairs.insert({e.u, e.v});
    if (!adjacent.count({e.u, e.v}))
      support.fail("minor edge {" + std::to_string(result.terminals[e.u]) + "," +
                   std::to_string(result.terminals[e.v]) + "} has no supporting edge");
  }
  for (auto [a, b] : adjacent)
    if (!minor_pairs.count({a, b}))
      support.fail("supernodes of " + std::to_string(result.terminals[a]) + " and " +
                   std::to_string(result.terminals[b]) + " touch but the minor has no edge");

  for (int a = 0; a < k; ++a) {
    auto dg = distances_from(g, result.terminals[a]);
    auto dm = distances_from(result.minor, a);
    for (int b = a + 1; b < k; ++b)
      if (dm[b] == kUnreachable || dm[b] < dg[result.terminals[b]])
        dominate.fail("pair " + std::to_string(result.terminals[a]) + "," +
                      std::to_string(result.terminals[b]));
  }
  return report;
}

Distortion distortion(const SprInstance& inst, const SprResult& result) {
  Distortion out;
  int k = static_cast<int>(result.terminals.size());
  for (int a = 0; a < k; ++a) {
    auto dg = distances_from(inst.graph, result.terminals[a]);
    auto dm = distances_from(result.minor, a);
    for (int b = a + 1; b < k; ++b) {
      double ratio = static_cast<double>(dm[b]) / static_cast<double>(dg[result.terminals[b]]);
      if (out.from < 0 || ratio > out.value) {
        out.value = ratio;
        out.from = result.terminals[a];
        out.to = result.terminals[b];
      }
    }
  }
  return out;
}

}  // namespace sparsify
