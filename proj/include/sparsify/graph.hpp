#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sparsify {

using VertexId = int;
using EdgeId = int;
using Weight = std::int64_t;

// Endpoints are stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight w = 1;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Incidence {
  VertexId to;
  EdgeId edge;
};

// Simple undirected graph with positive integer weights. Edge ids follow
// the (u, v) lexicographic order of the endpoints.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Throws GraphError on self loops, duplicate edges, out of range
  // endpoints or weights below 1.
  static WeightedGraph from_edges(int n, std::vector<Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Incidence>& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool has_unit_weights() const;
  Weight total_weight() const;

  bool operator==(const WeightedGraph& o) const {
    return num_vertices() == o.num_vertices() && edges_ == o.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

// Component label per vertex, labels numbered by smallest member.
std::vector<int> connected_components(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);

// Same as above but only through vertices with keep[v] set; others get -1.
std::vector<int> components_within(const WeightedGraph& g,
                                   const std::vector<char>& keep);

struct BlockDecomposition {
  std::vector<int> edge_block;     // -1 for masked-out edges
  std::vector<char> articulation;  // cut vertex of the masked graph
  int count = 0;
};

// Biconnected components of the edges with mask[e] set (all when null).
BlockDecomposition biconnected_blocks(const WeightedGraph& g,
                                      const std::vector<char>* mask = nullptr);

struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<VertexId> to_original;    // new id -> original id
  std::vector<VertexId> from_original;  // original id -> new id or -1
};

// Relabels in increasing order of original id, so relative order survives.
InducedSubgraph induced_subgraph(const WeightedGraph& g,
                                 std::vector<VertexId> vertices);

// Vertices listed in order, consecutive ones adjacent.
using Path = std::vector<VertexId>;

Weight path_length(const WeightedGraph& g, const Path& path);
std::vector<EdgeId> path_edges(const WeightedGraph& g, const Path& path);

struct UnitExpansion {
  WeightedGraph graph;
  // original id -> id in the expanded graph (originals keep their ids)
  std::vector<VertexId> vertex_map;
};

inline constexpr Weight kMaxEdgeWeight = 10'000;
inline constexpr Weight kMaxTotalWeight = 1'000'000;

// Replaces each edge of weight w by a path of w unit edges.
UnitExpansion expand_unit_weights(const WeightedGraph& g);

}  // namespace sparsify
