#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "egt/graph.hpp"

namespace egt {

// Insertion-ordered so serialized certificates keep a stable key order.
using json = nlohmann::ordered_json;

// Text format: `p <n> <m>` header, `e <u> <v>` per edge, `t <v>` per terminal.
// Vertex ids are 1-based on disk and 0-based in memory; the same shift applies
// to every JSON payload below.
Graph load_graph(std::istream& in, const std::string& name = "<stream>");
Graph load_graph_file(const std::string& path);
void save_graph(std::ostream& out, const Graph& g);
std::string graph_to_text(const Graph& g);

json path_to_json(const std::vector<int>& path);
std::vector<int> path_from_json(const json& j);
json vertex_set_to_json(const std::vector<int>& vs);
std::vector<int> vertex_set_from_json(const json& j);

json path_family_to_json(const PathFamily& f);
PathFamily path_family_from_json(const json& j);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json minor_model_to_json(const MinorModel& m);
MinorModel minor_model_from_json(const json& j);

std::string json_dumps(const json& j);
json json_parse(const std::string& text);
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace egt
