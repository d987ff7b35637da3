#include "sparsify/serialize.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace sparsify {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw GraphError(what + ": missing field '" + key + "'");
  return j[key];
}

int get_int(const Json& j, const std::string& key, const std::string& what) {
  const auto& x = field(j, key, what);
  if (!x.is_number_integer()) throw GraphError(what + ": field '" + key + "' must be an integer");
  return x.get<int>();
}

std::vector<int> get_ints(const Json& x, const std::string& what) {
  if (!x.is_array()) throw GraphError(what + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& v : x) {
    if (!v.is_number_integer()) throw GraphError(what + ": expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<int> get_ints(const Json& j, const std::string& key, const std::string& what) {
  return get_ints(field(j, key, what), what + "." + key);
}

}  // namespace

void put_rational(Json& j, const std::string& key, Rational r) {
  j[key] = r.to_double();
  j[key + "Exact"] = r.str();
}

Rational get_rational(const Json& j, const std::string& key) {
  if (j.contains(key + "Exact")) {
    const auto& x = j[key + "Exact"];
    if (!x.is_string()) throw GraphError("field '" + key + "Exact' must be a string");
    return Rational::parse(x.get<std::string>());
  }
  const auto& x = field(j, key, "value");
  if (x.is_number_integer()) return Rational(x.get<std::int64_t>());
  if (x.is_number()) return Rational::from_double(x.get<double>());
  if (x.is_string()) return Rational::parse(x.get<std::string>());
  throw GraphError("field '" + key + "' must be a number");
}

Json decomposition_to_json(const WeightedGraph& g, const HammockDecomposition& hd) {
  Json j;
  j["root"] = hd.root;
  j["t0"] = hd.t0;
  Json ep = Json::array();
  for (EdgeId e : hd.parent_edges) ep.push_back({g.edge(e).u, g.edge(e).v});
  j["ep"] = ep;
  Json hs = Json::array();
  for (std::size_t i = 0; i < hd.forest.hammocks.size(); ++i) {
    const auto& h = hd.forest.hammocks[i];
    Json x;
    x["class"] = h.class_id;
    x["treeA"] = h.tree_a;
    x["treeB"] = h.tree_b;
    x["rootA"] = h.root_a;
    x["rootB"] = h.root_b;
    x["parent"] = hd.forest.parent[i] < 0 ? Json(nullptr) : Json(hd.forest.parent[i]);
    hs.push_back(x);
  }
  j["hammocks"] = hs;
  return j;
}

HammockDecomposition decomposition_from_json(const WeightedGraph& g, const Json& j) {
  const std::string what = "decomposition";
  HammockDecomposition hd;
  hd.root = j.contains("root") ? get_int(j, "root", what) : 0;
  hd.t0 = get_ints(j, "t0", what);
  const auto& ep = field(j, "ep", what);
  if (!ep.is_array()) throw GraphError(what + ": 'ep' must be an array");
  for (const auto& pair : ep) {
    auto uv = get_ints(pair, what + ".ep");
    if (uv.size() != 2) throw GraphError(what + ": ep entries are [u, v]");
    auto e = g.find_edge(uv[0], uv[1]);
    if (!e)
      throw GraphError(what + ": ep names a non-edge {" + std::to_string(uv[0]) + "," +
                       std::to_string(uv[1]) + "}");
    hd.parent_edges.push_back(*e);
  }
  std::sort(hd.parent_edges.begin(), hd.parent_edges.end());
  const auto& hs = field(j, "hammocks", what);
  if (!hs.is_array()) throw GraphError(what + ": 'hammocks' must be an array");
  for (const auto& x : hs) {
    Hammock h;
    h.class_id = get_int(x, "class", what + ".hammocks");
    h.tree_a = get_ints(x, "treeA", what + ".hammocks");
    h.tree_b = get_ints(x, "treeB", what + ".hammocks");
    h.root_a = get_int(x, "rootA", what + ".hammocks");
    h.root_b = get_int(x, "rootB", what + ".hammocks");
    h.stage = HammockStage::kFinal;
    std::sort(h.tree_a.begin(), h.tree_a.end());
    std::sort(h.tree_b.begin(), h.tree_b.end());
    hd.forest.hammocks.push_back(std::move(h));
    const auto& p = field(x, "parent", what + ".hammocks");
    if (p.is_null()) hd.forest.parent.push_back(-1);
    else if (p.is_number_integer()) hd.forest.parent.push_back(p.get<int>());
    else throw GraphError(what + ": hammock parent must be an integer or null");
  }
  int count = static_cast<int>(hd.forest.hammocks.size());
  for (int p : hd.forest.parent)
    if (p < -1 || p >= count) throw GraphError(what + ": hammock parent out of range");
  return hd;
}

std::string decomposition_to_dot(const WeightedGraph& g, const HammockDecomposition& hd) {
  static const char* palette[] = {"blue", "darkgreen", "orange", "purple", "brown",
                                  "magenta", "cyan4", "gold3", "navy", "olivedrab"};
  int n = g.num_vertices();
  // edge owner: -2 T0, -3 E_p, otherwise hammock index
  std::vector<int> color(g.num_edges(), -1);
  std::vector<char> in_t0(n, 0);
  for (VertexId v : hd.t0) in_t0[v] = 1;
  for (EdgeId e : hd.parent_edges) color[e] = -3;
  for (std::size_t i = 0; i < hd.forest.hammocks.size(); ++i)
    for (EdgeId e : induced_edges(g, hd.forest.hammocks[i].vertices()))
      if (color[e] == -1) color[e] = static_cast<int>(i);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (color[e] == -1 && in_t0[g.edge(e).u] && in_t0[g.edge(e).v]) color[e] = -2;

  std::ostringstream out;
  out << "graph decomposition {\n";
  for (VertexId v = 0; v < n; ++v) {
    out << "  " << v << " [";
    if (v == hd.root) out << "shape=doublecircle,";
    out << (in_t0[v] ? "style=filled,fillcolor=lightgray" : "style=solid") << "];\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    out << "  " << ed.u << " -- " << ed.v << " [";
    if (ed.w != 1) out << "label=" << ed.w << ",";
    if (color[e] == -3) out << "color=red,style=bold";
    else if (color[e] == -2) out << "color=black";
    else if (color[e] >= 0) out << "color=" << palette[color[e] % 10];
    else out << "color=gray,style=dotted";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json chop_to_json(const FuzzyChop& chop) {
  Json j;
  j["root"] = chop.root;
  put_rational(j, "delta", chop.delta);
  put_rational(j, "fuzz", chop.fuzz);
  j["dist"] = chop.dist;
  j["annulus"] = chop.annulus;
  return j;
}

FuzzyChop chop_from_json(const Json& j) {
  const std::string what = "chop";
  FuzzyChop c;
  c.root = get_int(j, "root", what);
  c.delta = get_rational(j, "delta");
  c.fuzz = get_rational(j, "fuzz");
  c.annulus = get_ints(j, "annulus", what);
  const auto& d = field(j, "dist", what);
  if (!d.is_array()) throw GraphError(what + ": 'dist' must be an array");
  for (const auto& x : d) {
    if (!x.is_number_integer()) throw GraphError(what + ": 'dist' must hold integers");
    c.dist.push_back(x.get<Weight>());
  }
  if (c.dist.size() != c.annulus.size())
    throw GraphError(what + ": 'dist' and 'annulus' differ in length");
  if (c.delta <= Rational(0)) throw GraphError(what + ": delta must be positive");
  return c;
}

Json scattering_chop_to_json(const ScatteringChop& sc) {
  Json j = chop_to_json(sc.chop);
  Json moves = Json::array();
  for (const auto& m : sc.moves) {
    Json x;
    x["vertex"] = m.vertex;
    x["from"] = m.from;
    x["to"] = m.to;
    x["rule"] = m.rule;
    x["owner"] = m.owner < 0 ? Json(nullptr) : Json(m.owner);
    x["ownerRoot"] = m.owner_root;
    moves.push_back(x);
  }
  j["moves"] = moves;
  j["tauObserved"] = sc.tau_observed;
  return j;
}

ScatteringChop scattering_chop_from_json(const Json& j) {
  const std::string what = "chop";
  ScatteringChop sc;
  sc.chop = chop_from_json(j);
  const auto& moves = field(j, "moves", what);
  if (!moves.is_array()) throw GraphError(what + ": 'moves' must be an array");
  for (const auto& x : moves) {
    ChopMove m;
    m.vertex = get_int(x, "vertex", what + ".moves");
    m.from = get_int(x, "from", what + ".moves");
    m.to = get_int(x, "to", what + ".moves");
    const auto& rule = field(x, "rule", what + ".moves");
    if (!rule.is_string()) throw GraphError(what + ": move rule must be a string");
    m.rule = rule.get<std::string>();
    const auto& owner = field(x, "owner", what + ".moves");
    m.owner = owner.is_null() ? -1 : get_int(x, "owner", what + ".moves");
    m.owner_root = get_int(x, "ownerRoot", what + ".moves");
    sc.moves.push_back(std::move(m));
  }
  sc.tau_observed = get_int(j, "tauObserved", what);
  return sc;
}

namespace {

Json node_to_json(const ChopHierarchy& h, int id) {
  const auto& node = h.nodes[id];
  Json j;
  j["annulus"] = node.annulus;
  j["vertices"] = node.vertices;
  Json parts = Json::array();
  for (int c : node.children) parts.push_back(node_to_json(h, c));
  j["parts"] = parts;
  return j;
}

}  // namespace

Json hierarchy_to_json(const ChopHierarchy& h) {
  Json j;
  put_rational(j, "delta", h.delta);
  j["levels"] = h.levels;
  Json tree = Json::array();
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
    if (h.nodes[i].parent < 0) tree.push_back(node_to_json(h, static_cast<int>(i)));
  j["tree"] = tree;
  return j;
}

ChopHierarchy hierarchy_from_json(const Json& j) {
  const std::string what = "hierarchy";
  ChopHierarchy h;
  h.delta = get_rational(j, "delta");
  h.levels = get_int(j, "levels", what);
  const auto& tree = field(j, "tree", what);
  if (!tree.is_array()) throw GraphError(what + ": 'tree' must be an array");
  // nodes are numbered level by level, as the builder does
  std::deque<std::pair<const Json*, int>> queue;  // node, parent id
  for (const auto& x : tree) queue.push_back({&x, -1});
  while (!queue.empty()) {
    auto [x, parent] = queue.front();
    queue.pop_front();
    ChopNode node;
    node.annulus = get_int(*x, "annulus", what);
    node.vertices = get_ints(*x, "vertices", what);
    node.parent = parent;
    node.level = parent < 0 ? 0 : h.nodes[parent].level + 1;
    int id = static_cast<int>(h.nodes.size());
    if (parent >= 0) h.nodes[parent].children.push_back(id);
    h.nodes.push_back(std::move(node));
    const auto& parts = field(*x, "parts", what);
    if (!parts.is_array()) throw GraphError(what + ": 'parts' must be an array");
    for (const auto& c : parts) queue.push_back({&c, id});
  }
  return h;
}

Json partition_to_json(const ScatteringPartition& p) {
  Json j;
  put_rational(j, "delta", p.delta);
  put_rational(j, "width", p.width);
  j["levels"] = p.levels;
  j["parts"] = p.parts;
  j["partOf"] = p.part_of;
  j["hierarchy"] = hierarchy_to_json(p.hierarchy);
  j["tauObserved"] = p.tau_observed;
  return j;
}

ScatteringPartition partition_from_json(const Json& j) {
  const std::string what = "partition";
  ScatteringPartition p;
  p.delta = get_rational(j, "delta");
  p.width = get_rational(j, "width");
  p.levels = get_int(j, "levels", what);
  const auto& parts = field(j, "parts", what);
  if (!parts.is_array()) throw GraphError(what + ": 'parts' must be an array");
  for (const auto& x : parts) p.parts.push_back(get_ints(x, what + ".parts"));
  p.part_of = get_ints(j, "partOf", what);
  p.hierarchy = hierarchy_from_json(field(j, "hierarchy", what));
  p.tau_observed = get_int(j, "tauObserved", what);
  return p;
}

Json spr_instance_to_json(const SprInstance& inst) {
  Json j;
  j["graph"] = graph_to_json(inst.graph);
  j["terminals"] = inst.terminals;
  return j;
}

SprInstance spr_instance_from_json(const Json& j) {
  SprInstance inst;
  auto doc = graph_from_json(field(j, "graph", "spr instance"));
  inst.graph = doc.graph;
  inst.terminals = get_ints(j, "terminals", "spr instance");
  return inst;
}

Json spr_result_to_json(const SprResult& r, const Distortion& d) {
  Json j;
  j["minor"] = graph_to_json(r.minor);
  j["terminals"] = r.terminals;  // minor vertex k is terminals[k]
  Json witness = Json::array();
  for (VertexId t : r.witness) witness.push_back(t < 0 ? Json(nullptr) : Json(t));
  j["witness"] = witness;
  j["distortion"] = d.value;
  j["argmax"] = d.from < 0 ? Json(nullptr) : Json::array({d.from, d.to});
  return j;
}

SprResult spr_result_from_json(const Json& j) {
  const std::string what = "spr result";
  SprResult r;
  auto doc = graph_from_json(field(j, "minor", what));
  r.minor = doc.graph;
  r.terminals = get_ints(j, "terminals", what);
  if (static_cast<int>(r.terminals.size()) != r.minor.num_vertices())
    throw GraphError(what + ": one terminal per minor vertex expected");
  if (!std::is_sorted(r.terminals.begin(), r.terminals.end()))
    throw GraphError(what + ": minor terminals must be sorted");
  const auto& w = field(j, "witness", what);
  if (!w.is_array()) throw GraphError(what + ": 'witness' must be an array");
  for (const auto& x : w) {
    if (x.is_null()) r.witness.push_back(-1);
    else if (x.is_number_integer()) r.witness.push_back(x.get<VertexId>());
    else throw GraphError(what + ": witness entries are terminal ids or null");
  }
  return r;
}

Json ears_to_json(const EarDecomposition& ed) {
  Json j;
  j["ears"] = ed.ears;
  j["parentEar"] = ed.parent_ear;
  return j;
}

EarDecomposition ears_from_json(const Json& j) {
  EarDecomposition ed;
  const auto& ears = field(j, "ears", "ears");
  if (!ears.is_array()) throw GraphError("ears: 'ears' must be an array");
  for (const auto& x : ears) ed.ears.push_back(get_ints(x, "ears"));
  ed.parent_ear = get_ints(j, "parentEar", "ears");
  return ed;
}

Json report_to_json(const Report& report) {
  Json j;
  j["ok"] = report.ok();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json x;
    x["name"] = c.name;
    x["passed"] = c.passed;
    x["witnesses"] = c.failures;
    checks.push_back(x);
  }
  j["checks"] = checks;
  return j;
}

namespace {

bool flat(const Json& j) {
  if (j.is_object()) return false;
  if (!j.is_array()) return true;
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !flat(x))) return false;
  return true;
}

void write(const Json& j, int indent, std::string& out) {
  std::string pad(indent + 2, ' ');
  if (flat(j)) {
    out += j.dump();
  } else if (j.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else if (j.empty()) {
    out += "{}";
  } else {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      write(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  }
}

}  // namespace

// Objects one key per line; arrays of scalars (or of scalar arrays) inline.
std::string dump(const Json& j) {
  std::string out;
  write(j, 0, out);
  return out + "\n";
}

}  // namespace sparsify
