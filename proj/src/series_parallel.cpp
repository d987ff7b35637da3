#include "sparsify/series_parallel.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sparsify {

namespace {

// Runs the reductions on the edge subset with alive[e] set.
bool reduces_to_empty(int n, const std::vector<Edge>& edges,
                      const std::vector<char>& alive) {
  std::vector<std::set<VertexId>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (alive[i]) {
      adj[edges[i].u].insert(edges[i].v);
      adj[edges[i].v].insert(edges[i].u);
    }
  std::deque<VertexId> work;
  std::vector<char> gone(n, 0);
  for (VertexId v = 0; v < n; ++v) work.push_back(v);
  while (!work.empty()) {
    VertexId v = work.front();
    work.pop_front();
    if (gone[v] || adj[v].size() > 2) continue;
    gone[v] = 1;
    std::vector<VertexId> nb(adj[v].begin(), adj[v].end());
    for (VertexId x : nb) adj[x].erase(v);
    adj[v].clear();
    if (nb.size() == 2) {
      // suppress v; a parallel edge that already exists just merges
      adj[nb[0]].insert(nb[1]);
      adj[nb[1]].insert(nb[0]);
    }
    for (VertexId x : nb) work.push_back(x);
  }
  return std::all_of(gone.begin(), gone.end(), [](char c) { return c; });
}

// Shrinks a non-reducible edge set to a subdivided K4 and reads it off.
ClawedCycle extract_witness(const WeightedGraph& g) {
  int n = g.num_vertices();
  const auto& edges = g.edges();
  std::vector<char> alive(edges.size(), 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    alive[i] = 0;
    if (reduces_to_empty(n, edges, alive)) alive[i] = 1;
  }
  std::vector<std::vector<VertexId>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (alive[i]) {
      adj[edges[i].u].push_back(edges[i].v);
      adj[edges[i].v].push_back(edges[i].u);
    }
  std::vector<VertexId> branch;
  for (VertexId v = 0; v < n; ++v) {
    if (adj[v].size() == 3) branch.push_back(v);
    else if (!adj[v].empty() && adj[v].size() != 2)
      throw GraphError("witness extraction: unexpected degree");
  }
  if (branch.size() != 4) throw GraphError("witness extraction: not a K4 subdivision");
  auto is_branch = [&](VertexId v) { return adj[v].size() == 3; };
  // trace the chain leaving `from` through `first`
  auto chain = [&](VertexId from, VertexId first) {
    Path p{from};
    VertexId prev = from, cur = first;
    while (!is_branch(cur)) {
      p.push_back(cur);
      VertexId next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    p.push_back(cur);
    return p;
  };
  ClawedCycle w;
  w.claw_root = branch[0];
  std::vector<Path> from_root;
  for (VertexId first : adj[branch[0]]) from_root.push_back(chain(branch[0], first));
  std::sort(from_root.begin(), from_root.end(),
            [](const Path& a, const Path& b) { return a.back() < b.back(); });
  w.claws = from_root;
  // cycle through the other three branch vertices
  VertexId a = branch[1], b = branch[2], c = branch[3];
  auto between = [&](VertexId x, VertexId y) {
    for (VertexId first : adj[x]) {
      Path p = chain(x, first);
      if (p.back() == y) return p;
    }
    throw GraphError("witness extraction: missing chain");
  };
  Path ab = between(a, b), bc = between(b, c), ca = between(c, a);
  w.cycle = ab;
  w.cycle.insert(w.cycle.end(), bc.begin() + 1, bc.end());
  w.cycle.insert(w.cycle.end(), ca.begin() + 1, ca.end());
  return w;
}

}  // namespace

SpRecognition recognize_series_parallel(const WeightedGraph& g) {
  SpRecognition out;
  out.series_parallel =
      reduces_to_empty(g.num_vertices(), g.edges(),
                       std::vector<char>(g.num_edges(), 1));
  if (!out.series_parallel) out.witness = extract_witness(g);
  return out;
}

bool is_series_parallel(const WeightedGraph& g) {
  return reduces_to_empty(g.num_vertices(), g.edges(),
                          std::vector<char>(g.num_edges(), 1));
}

std::string check_clawed_cycle(const WeightedGraph& g, const ClawedCycle& w) {
  const auto& cyc = w.cycle;
  if (cyc.size() < 4 || cyc.front() != cyc.back()) return "cycle is not closed";
  std::set<VertexId> on_cycle(cyc.begin(), cyc.end() - 1);
  if (on_cycle.size() != cyc.size() - 1) return "cycle repeats a vertex";
  for (std::size_t i = 1; i < cyc.size(); ++i)
    if (!g.find_edge(cyc[i - 1], cyc[i])) return "cycle step is not an edge";
  if (w.claws.size() != 3) return "need exactly three claws";
  if (on_cycle.count(w.claw_root)) return "claw root lies on the cycle";
  std::set<VertexId> used{w.claw_root};
  std::set<VertexId> ends;
  for (const auto& p : w.claws) {
    if (p.size() < 2 || p.front() != w.claw_root) return "claw does not start at root";
    if (!on_cycle.count(p.back())) return "claw does not end on the cycle";
    ends.insert(p.back());
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (!g.find_edge(p[i - 1], p[i])) return "claw step is not an edge";
      if (i + 1 < p.size()) {
        if (on_cycle.count(p[i])) return "claw touches the cycle early";
        if (!used.insert(p[i]).second) return "claws share a vertex";
      }
    }
  }
  if (ends.size() != 3) return "claws end at the same cycle vertex";
  return {};
}

}  // namespace sparsify
