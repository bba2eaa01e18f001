#include "jacstrat/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace jacstrat {

namespace {

using nlohmann::json;

long long genus_field(const json& v, std::size_t i) {
  if (!v.contains("genus")) return 0;  // omitted genus means rational component
  const json& g = v["genus"];
  if (!g.is_number_integer() || g.get<long long>() < 0)
    throw ValidationError("vertices[" + std::to_string(i) + "].genus must be a nonnegative integer");
  return g.get<long long>();
}

}  // namespace

CurveGraph parse_graph_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ValidationError(std::string("graph file is not valid JSON: ") + err.what());
  }
  if (!doc.is_object()) throw ValidationError("graph file must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ValidationError("graph file needs a \"vertices\" array");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw ValidationError("graph file needs an \"edges\" array");

  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const json& v = doc["vertices"][i];
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
      throw ValidationError("vertices[" + std::to_string(i) + "] needs a string \"id\"");
    vertices.push_back({v["id"].get<std::string>(), genus_field(v, i)});
  }

  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const json& e = doc["edges"][i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ValidationError("edges[" + std::to_string(i) +
                            "] must be a pair of vertex ids, like [\"v1\", \"v2\"]");
    edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
  }

  return CurveGraph::from_ids(std::move(vertices), edges);
}

CurveGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_json(buf.str());
}

std::string graph_to_json(const CurveGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (const Vertex& v : g.vertices()) doc["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
  doc["edges"] = json::array();
  for (const Edge& e : g.edges())
    doc["edges"].push_back({g.vertex(e.first).id, g.vertex(e.second).id});
  return doc.dump(2) + "\n";
}

}  // namespace jacstrat
