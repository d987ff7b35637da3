#include "sparsify/generator.hpp"

#include <algorithm>
#include <numeric>

namespace sparsify {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  // rejection keeps it unbiased
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

struct Builder {
  int n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  VertexId add_vertex() { return n++; }
};

// Grows one two-terminal block to `size` vertices, returns its vertices.
std::vector<VertexId> grow_block(Builder& b, std::mt19937_64& rng, int size,
                                 const GeneratorConfig& cfg) {
  std::vector<VertexId> verts;
  std::size_t first_edge = b.edges.size();
  VertexId s = b.add_vertex(), t = b.add_vertex();
  verts = {s, t};
  b.edges.push_back({s, t});
  if (cfg.biconnected && size >= 3) {
    VertexId x = b.add_vertex();
    verts.push_back(x);
    b.edges.push_back({s, x});
    b.edges.push_back({x, t});
  }
  while (static_cast<int>(verts.size()) < size) {
    std::size_t pick = first_edge + uniform_below(rng, b.edges.size() - first_edge);
    auto [a, c] = b.edges[pick];
    int remaining = size - static_cast<int>(verts.size());
    bool series = uniform_unit(rng) < cfg.series_probability;
    if (series) {
      VertexId x = b.add_vertex();
      verts.push_back(x);
      b.edges[pick] = {a, x};
      b.edges.push_back({x, c});
    } else {
      int len = uniform_int(rng, 2, std::max(2, std::min(cfg.max_parallel_length, remaining + 1)));
      VertexId prev = a;
      for (int step = 1; step < len; ++step) {
        VertexId x = b.add_vertex();
        verts.push_back(x);
        b.edges.push_back({prev, x});
        prev = x;
      }
      b.edges.push_back({prev, c});
    }
  }
  return verts;
}

}  // namespace

WeightedGraph generate_series_parallel(std::uint64_t seed, int n,
                                       const GeneratorConfig& cfg) {
  if (n < 1) throw GraphError("generator needs n >= 1");
  std::mt19937_64 rng(seed);
  Builder b;
  if (n == 1) {
    b.n = 1;
  } else {
    int blocks = 1;
    if (cfg.glue_blocks && !cfg.biconnected)
      blocks = uniform_int(rng, 1, std::max(1, std::min(cfg.max_blocks, n / 2)));
    // split n - 1 new vertices among blocks (each block adds size - 1)
    std::vector<int> sizes(blocks, 2);
    int extra = n - 1 - blocks;
    for (int i = 0; i < extra; ++i) ++sizes[uniform_below(rng, blocks)];
    std::vector<VertexId> all;
    for (int i = 0; i < blocks; ++i) {
      int before_vertices = b.n;
      auto verts = grow_block(b, rng, sizes[i], cfg);
      if (i == 0) {
        all = verts;
        continue;
      }
      // glue: identify the block's first vertex with an existing one
      VertexId anchor = all[uniform_below(rng, all.size())];
      VertexId glued = verts[0];
      for (auto& [x, y] : b.edges) {
        if (x == glued) x = anchor;
        if (y == glued) y = anchor;
      }
      // compact ids: shift the block down by one past the glued vertex
      for (auto& [x, y] : b.edges) {
        if (x > glued) --x;
        if (y > glued) --y;
      }
      b.n -= 1;
      for (int v = before_vertices; v < b.n; ++v) all.push_back(v);
    }
  }

  std::vector<VertexId> label(b.n);
  std::iota(label.begin(), label.end(), 0);
  if (cfg.shuffle_labels)
    for (int i = b.n - 1; i > 0; --i)
      std::swap(label[i], label[uniform_below(rng, i + 1)]);
  std::vector<Edge> edges;
  for (auto [x, y] : b.edges) {
    Weight w = cfg.max_weight > 1 ? uniform_int(rng, 1, static_cast<int>(cfg.max_weight)) : 1;
    edges.push_back({label[x], label[y], w});
  }
  return WeightedGraph::from_edges(b.n, std::move(edges));
}

WeightedGraph generate_random_graph(std::uint64_t seed, int n, double p) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < p) edges.push_back({u, v, 1});
  return WeightedGraph::from_edges(n, std::move(edges));
}

}  // namespace sparsify
