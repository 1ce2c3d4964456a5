#include "egt/io.hpp"

#include <fstream>
#include <sstream>

namespace egt {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& why) {
  throw error(name + ":" + std::to_string(line) + ": " + why);
}

}  // namespace

Graph load_graph(std::istream& in, const std::string& name) {
  Graph g;
  bool have_header = false;
  int declared_m = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind[0] == 'c' || kind[0] == '#') continue;
    if (kind == "p") {
      if (have_header) parse_fail(name, lineno, "duplicate header");
      int n, m;
      if (!(ls >> n >> m) || n < 0 || m < 0)
        parse_fail(name, lineno, "expected `p <n> <m>`");
      g.init(n);
      declared_m = m;
      have_header = true;
    } else if (kind == "e") {
      if (!have_header) parse_fail(name, lineno, "edge before header");
      int u, v;
      if (!(ls >> u >> v)) parse_fail(name, lineno, "expected `e <u> <v>`");
      if (u < 1 || u > g.n || v < 1 || v > g.n)
        parse_fail(name, lineno, "edge endpoint out of range");
      if (u == v) parse_fail(name, lineno, "self-loop");
      g.add_edge(u - 1, v - 1);
    } else if (kind == "t") {
      if (!have_header) parse_fail(name, lineno, "terminal before header");
      int v;
      if (!(ls >> v)) parse_fail(name, lineno, "expected `t <v>`");
      if (v < 1 || v > g.n) parse_fail(name, lineno, "terminal out of range");
      g.set_terminal(v - 1);
    } else {
      parse_fail(name, lineno, "unknown line kind `" + kind + "`");
    }
  }
  if (!have_header) parse_fail(name, lineno ? lineno : 1, "missing `p <n> <m>` header");
  if (g.m() != declared_m)
    parse_fail(name, lineno, "header declares " + std::to_string(declared_m) +
                                 " edges, file has " + std::to_string(g.m()));
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  return load_graph(in, path);
}

void save_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.n << " " << g.m() << "\n";
  for (const auto& [u, v] : g.edges) out << "e " << u + 1 << " " << v + 1 << "\n";
  for (int v = 0; v < g.n; v++)
    if (g.terminal[v]) out << "t " << v + 1 << "\n";
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  save_graph(out, g);
  return out.str();
}

json path_to_json(const std::vector<int>& path) {
  json arr = json::array();
  for (int v : path) arr.push_back(v + 1);
  return arr;
}

std::vector<int> path_from_json(const json& j) {
  require(j.is_array(), "expected a JSON array of vertex ids");
  std::vector<int> out;
  for (const auto& x : j) {
    require(x.is_number_integer(), "vertex id must be an integer");
    int v = x.get<int>();
    require(v >= 1, "vertex ids are 1-based");
    out.push_back(v - 1);
  }
  return out;
}

json vertex_set_to_json(const std::vector<int>& vs) { return path_to_json(vs); }

std::vector<int> vertex_set_from_json(const json& j) { return path_from_json(j); }

namespace {

const char* disjointness_name(Disjointness d) {
  switch (d) {
    case Disjointness::node: return "node";
    case Disjointness::edge: return "edge";
    case Disjointness::congestion: return "congestion";
  }
  throw internal_error("unreachable disjointness");
}

Disjointness disjointness_from_name(const std::string& s) {
  if (s == "node") return Disjointness::node;
  if (s == "edge") return Disjointness::edge;
  if (s == "congestion") return Disjointness::congestion;
  throw error("unknown disjointness kind `" + s + "`");
}

}  // namespace

json path_family_to_json(const PathFamily& f) {
  json j;
  j["kind"] = disjointness_name(f.kind);
  if (f.kind == Disjointness::congestion) j["eta"] = f.eta;
  j["paths"] = json::array();
  for (const auto& p : f.paths) j["paths"].push_back(path_to_json(p));
  if (!f.internal_disjoint_from.empty())
    j["internal_disjoint_from"] = vertex_set_to_json(f.internal_disjoint_from);
  return j;
}

PathFamily path_family_from_json(const json& j) {
  require(j.is_object() && j.contains("paths"), "path family needs a `paths` array");
  PathFamily f;
  f.kind = disjointness_from_name(j.value("kind", std::string("node")));
  if (f.kind == Disjointness::congestion) {
    require(j.contains("eta"), "congestion family needs `eta`");
    f.eta = j["eta"].get<int>();
  }
  for (const auto& p : j["paths"]) f.paths.push_back(path_from_json(p));
  if (j.contains("internal_disjoint_from"))
    f.internal_disjoint_from = vertex_set_from_json(j["internal_disjoint_from"]);
  return f;
}

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n;
  j["edges"] = json::array();
  for (const auto& [u, v] : g.edges) j["edges"].push_back({u + 1, v + 1});
  auto t = g.terminals();
  if (!t.empty()) j["terminals"] = vertex_set_to_json(t);
  return j;
}

Graph graph_from_json(const json& j) {
  require(j.is_object() && j.contains("n") && j.contains("edges"),
          "graph JSON needs `n` and `edges`");
  Graph g(j["n"].get<int>());
  for (const auto& e : j["edges"]) {
    require(e.is_array() && e.size() == 2, "edge must be a pair");
    int u = e[0].get<int>(), v = e[1].get<int>();
    require(u >= 1 && u <= g.n && v >= 1 && v <= g.n, "edge endpoint out of range");
    g.add_edge(u - 1, v - 1);
  }
  if (j.contains("terminals"))
    for (int v : vertex_set_from_json(j["terminals"])) g.set_terminal(v);
  return g;
}

json minor_model_to_json(const MinorModel& m) {
  json j;
  j["pattern"] = graph_to_json(m.pattern);
  j["branch_sets"] = json::object();
  for (size_t v = 0; v < m.branch_sets.size(); v++)
    j["branch_sets"][std::to_string(v + 1)] = vertex_set_to_json(m.branch_sets[v]);
  j["edge_paths"] = json::object();
  for (size_t e = 0; e < m.edge_paths.size(); e++)
    j["edge_paths"][std::to_string(e + 1)] = path_to_json(m.edge_paths[e]);
  return j;
}

MinorModel minor_model_from_json(const json& j) {
  require(j.is_object() && j.contains("pattern") && j.contains("branch_sets") &&
              j.contains("edge_paths"),
          "minor model JSON needs `pattern`, `branch_sets`, `edge_paths`");
  MinorModel m;
  m.pattern = graph_from_json(j["pattern"]);
  m.branch_sets.assign(m.pattern.n, {});
  for (const auto& [key, val] : j["branch_sets"].items()) {
    int v = std::stoi(key);
    require(v >= 1 && v <= m.pattern.n, "branch set key out of range");
    m.branch_sets[v - 1] = vertex_set_from_json(val);
  }
  m.edge_paths.assign(m.pattern.m(), {});
  for (const auto& [key, val] : j["edge_paths"].items()) {
    int e = std::stoi(key);
    require(e >= 1 && e <= m.pattern.m(), "edge path key out of range");
    m.edge_paths[e - 1] = path_from_json(val);
  }
  return m;
}

std::string json_dumps(const json& j) { return j.dump(2) + "\n"; }

json json_parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(std::string("JSON parse error: ") + e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return json_parse(buf.str());
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw error("cannot open " + path + " for writing");
  out << json_dumps(j);
}

}  // namespace egt
