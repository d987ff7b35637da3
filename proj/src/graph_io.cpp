#include "sparsify/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace sparsify {

Json graph_to_json(const GraphDocument& doc) {
  Json j;
  j["n"] = doc.graph.num_vertices();
  Json edges = Json::array();
  for (const auto& e : doc.graph.edges()) edges.push_back({e.u, e.v, e.w});
  j["edges"] = edges;
  j["root"] = doc.root ? Json(*doc.root) : Json(nullptr);
  j["terminals"] = doc.terminals ? Json(*doc.terminals) : Json(nullptr);
  return j;
}

Json graph_to_json(const WeightedGraph& g) { return graph_to_json(GraphDocument{g, {}, {}}); }

GraphDocument graph_from_json(const Json& j) {
  if (!j.is_object()) throw GraphError("graph: expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw GraphError("graph: field 'n' must be an integer");
  int n = j["n"].get<int>();
  if (!j.contains("edges") || !j["edges"].is_array())
    throw GraphError("graph: field 'edges' must be an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& e = j["edges"][i];
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      throw GraphError("graph: edges[" + std::to_string(i) + "] must be [u, v] or [u, v, w]");
    for (const auto& x : e)
      if (!x.is_number_integer())
        throw GraphError("graph: edges[" + std::to_string(i) + "] has a non-integer entry");
    edges.push_back({e[0].get<VertexId>(), e[1].get<VertexId>(),
                     e.size() == 3 ? e[2].get<Weight>() : 1});
  }
  GraphDocument doc;
  doc.graph = WeightedGraph::from_edges(n, std::move(edges));
  if (j.contains("root") && !j["root"].is_null()) {
    if (!j["root"].is_number_integer()) throw GraphError("graph: field 'root' must be an integer");
    doc.root = j["root"].get<VertexId>();
    if (*doc.root < 0 || *doc.root >= n) throw GraphError("graph: root out of range");
  }
  if (j.contains("terminals") && !j["terminals"].is_null()) {
    if (!j["terminals"].is_array()) throw GraphError("graph: field 'terminals' must be an array");
    std::vector<VertexId> terms;
    for (const auto& t : j["terminals"]) {
      if (!t.is_number_integer()) throw GraphError("graph: terminals must be integers");
      terms.push_back(t.get<VertexId>());
      if (terms.back() < 0 || terms.back() >= n)
        throw GraphError("graph: terminal out of range");
    }
    doc.terminals = terms;
  }
  return doc;
}

std::string graph_to_dot(const WeightedGraph& g, const RootedBfsTree* tree) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    if (tree && v == tree->root()) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    out << "  " << ed.u << " -- " << ed.v << " [";
    if (ed.w != 1) out << "label=" << ed.w << ",";
    if (tree) out << (tree->is_tree_edge(e) ? "style=solid" : "style=dashed,color=red");
    else out << "style=solid";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path);
  out << text;
}

}  // namespace sparsify
