#pragma once

#include <string>

#include "jacstrat/curve_graph.hpp"

// JSON form of a graph:
//   {"vertices": [{"id": "v1", "genus": 0}, ...],
//    "edges": [["v1", "v2"], ["v1", "v1"], ...]}
// Edge order in the file fixes the edge ids.

namespace jacstrat {

CurveGraph parse_graph_json(const std::string& text);
CurveGraph load_graph_file(const std::string& path);
std::string graph_to_json(const CurveGraph& g);

}  // namespace jacstrat
