#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sparsify/bfs_tree.hpp"
#include "sparsify/graph.hpp"

namespace sparsify {

using Json = nlohmann::ordered_json;

struct GraphDocument {
  WeightedGraph graph;
  std::optional<VertexId> root;
  std::optional<std::vector<VertexId>> terminals;
};

// {"n", "edges": [[u, v, w], ...], "root": int|null, "terminals": [...]|null}
Json graph_to_json(const GraphDocument& doc);
Json graph_to_json(const WeightedGraph& g);
// Throws GraphError with a field-level message.
GraphDocument graph_from_json(const Json& j);

// Tree edges solid, cross edges dashed when a tree is given.
std::string graph_to_dot(const WeightedGraph& g,
                         const RootedBfsTree* tree = nullptr);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sparsify
