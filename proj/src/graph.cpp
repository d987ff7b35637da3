#include "sparsify/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "sparsify/rational.hpp"

namespace sparsify {

WeightedGraph WeightedGraph::from_edges(int n, std::vector<Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw GraphError("edge endpoint out of range: {" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + "}");
    if (e.u == e.v) throw GraphError("self loop at " + std::to_string(e.u));
    if (e.w < 1)
      throw GraphError("non-positive weight on edge {" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + "}");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
      throw GraphError("duplicate edge {" + std::to_string(edges[i].u) + "," +
                       std::to_string(edges[i].v) + "}");

  WeightedGraph g;
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edges_[id];
    g.adj_[e.u].push_back({e.v, id});
    g.adj_[e.v].push_back({e.u, id});
  }
  for (auto& list : g.adj_)
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
  return g;
}

std::optional<EdgeId> WeightedGraph::find_edge(VertexId a, VertexId b) const {
  if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices())
    return std::nullopt;
  const auto& list = adj_[a];
  auto it = std::lower_bound(
      list.begin(), list.end(), b,
      [](const Incidence& inc, VertexId x) { return inc.to < x; });
  if (it == list.end() || it->to != b) return std::nullopt;
  return it->edge;
}

bool WeightedGraph::has_unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.w == 1; });
}

Weight WeightedGraph::total_weight() const {
  Weight total = 0;
  for (const auto& e : edges_) total += e.w;
  return total;
}

std::vector<int> components_within(const WeightedGraph& g,
                                   const std::vector<char>& keep) {
  std::vector<int> label(g.num_vertices(), -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (!keep[s] || label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.neighbors(x)) {
        if (keep[inc.to] && label[inc.to] == -1) {
          label[inc.to] = next;
          stack.push_back(inc.to);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<int> connected_components(const WeightedGraph& g) {
  return components_within(g, std::vector<char>(g.num_vertices(), 1));
}

bool is_connected(const WeightedGraph& g) {
  auto label = connected_components(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

BlockDecomposition biconnected_blocks(const WeightedGraph& g,
                                      const std::vector<char>* mask) {
  int n = g.num_vertices();
  auto on = [&](EdgeId e) { return mask == nullptr || (*mask)[e]; };
  BlockDecomposition out;
  out.edge_block.assign(g.num_edges(), -1);
  out.articulation.assign(n, 0);
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  int clock = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    disc[s] = low[s] = clock++;
    int root_children = 0;
    std::vector<Frame> frames{{s, -1, 0}};
    while (!frames.empty()) {
      Frame& f = frames.back();
      VertexId v = f.v;
      if (f.next < g.neighbors(v).size()) {
        Incidence inc = g.neighbors(v)[f.next++];
        if (!on(inc.edge) || inc.edge == f.via) continue;
        VertexId w = inc.to;
        if (disc[w] == -1) {
          edge_stack.push_back(inc.edge);
          disc[w] = low[w] = clock++;
          frames.push_back({w, inc.edge, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(inc.edge);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      EdgeId via = f.via;
      frames.pop_back();
      if (frames.empty()) break;
      VertexId u = frames.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        if (u == s) ++root_children;
        else out.articulation[u] = 1;
        while (true) {
          EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          out.edge_block[e] = out.count;
          if (e == via) break;
        }
        ++out.count;
      }
    }
    if (root_children > 1) out.articulation[s] = 1;
  }
  return out;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g,
                                 std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  InducedSubgraph sub;
  sub.to_original = vertices;
  sub.from_original.assign(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    sub.from_original[vertices[i]] = static_cast<VertexId>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    VertexId a = sub.from_original[e.u], b = sub.from_original[e.v];
    if (a >= 0 && b >= 0) edges.push_back({a, b, e.w});
  }
  sub.graph = WeightedGraph::from_edges(static_cast<int>(vertices.size()),
                                        std::move(edges));
  return sub;
}

Weight path_length(const WeightedGraph& g, const Path& path) {
  Weight total = 0;
  for (EdgeId e : path_edges(g, path)) total += g.edge(e).w;
  return total;
}

std::vector<EdgeId> path_edges(const WeightedGraph& g, const Path& path) {
  std::vector<EdgeId> out;
  for (std::size_t i = 1; i < path.size(); ++i) {
    auto e = g.find_edge(path[i - 1], path[i]);
    if (!e)
      throw GraphError("path step without edge: " + std::to_string(path[i - 1]) +
                       " -> " + std::to_string(path[i]));
    out.push_back(*e);
  }
  return out;
}

UnitExpansion expand_unit_weights(const WeightedGraph& g) {
  Weight total = 0;
  for (const auto& e : g.edges()) {
    if (e.w > kMaxEdgeWeight)
      throw GraphError("edge weight " + std::to_string(e.w) + " exceeds cap " +
                       std::to_string(kMaxEdgeWeight));
    total += e.w;
  }
  if (total > kMaxTotalWeight)
    throw GraphError("total weight " + std::to_string(total) +
                     " exceeds cap " + std::to_string(kMaxTotalWeight));

  UnitExpansion out;
  int n = g.num_vertices();
  out.vertex_map.resize(n);
  for (VertexId v = 0; v < n; ++v) out.vertex_map[v] = v;
  std::vector<Edge> edges;
  int next = n;
  for (const auto& e : g.edges()) {
    VertexId prev = e.u;
    for (Weight step = 1; step < e.w; ++step) {
      edges.push_back({prev, next, 1});
      prev = next++;
    }
    edges.push_back({prev, e.v, 1});
  }
  out.graph = WeightedGraph::from_edges(next, std::move(edges));
  return out;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational: " + text);
  }
}

Rational Rational::from_double(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite number");
  // continued fraction convergents
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(rest);
    auto ai = static_cast<std::int64_t>(a);
    std::int64_t q2 = q0 + ai * q1;
    if (q2 > max_den) break;
    std::int64_t p2 = p0 + ai * p1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = rest - a;
    if (frac < 1e-12) break;
    rest = 1.0 / frac;
  }
  return Rational(p1, q1);
}

}  // namespace sparsify
