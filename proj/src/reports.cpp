#include "jacstrat/reports.hpp"

#include <algorithm>
#include <sstream>

namespace jacstrat::reports {

namespace {

using nlohmann::json;

json graph_block(const CurveGraph& g) {
  json vertices = json::array();
  for (const Vertex& v : g.vertices()) vertices.push_back({{"id", v.id}, {"genus", v.genus}});
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back({g.vertex(e.first).id, g.vertex(e.second).id});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json counts_pairs(const std::map<int, long long>& counts) {
  json out = json::array();
  for (const auto& [key, value] : counts) out.push_back({key, value});
  return out;
}

json edge_id_list(const CurveGraph& g, std::uint64_t mask) {
  json out = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    if ((mask >> e) & 1u) out.push_back(e);
  }
  return out;
}

json vertex_id_list(const CurveGraph& g, std::uint64_t mask) {
  json out = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((mask >> v) & 1u) out.push_back(g.vertex(v).id);
  }
  return out;
}

json witness_field(const CurveGraph& g, const Classification& c) {
  if (!c.witness) return nullptr;
  return vertex_id_list(g, *c.witness);
}

json rational_strings(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& q : values) out.push_back(rational_to_string(q));
  return out;
}

json base(const char* command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

// Table helpers. Columns are padded to their widest entry; every table
// ends in a newline.
std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string format_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += pad(row[c], c + 1 == row.size() ? 0 : widths[c] + 2);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string joined(const json& array, const char* sep = ", ") {
  std::string out;
  for (const auto& item : array) {
    if (!out.empty()) out += sep;
    if (item.is_string())
      out += item.get<std::string>();
    else
      out += item.dump();
  }
  return out;
}

}  // namespace

json info_report(const CurveGraph& g) {
  json r = base("info");
  r["graph"] = graph_block(g);
  r["vertex_count"] = g.vertex_count();
  r["edge_count"] = g.edge_count();
  r["component_count"] = component_count(g);
  r["cyclomatic_number"] = cyclomatic_number(g);
  r["arithmetic_genus"] = arithmetic_genus(g);
  r["genus_sum"] = g.genus_sum();
  r["is_forest"] = cyclomatic_number(g) == 0;
  r["dualizing_multidegree"] = dualizing_multidegree(g);
  return r;
}

json strata_report(const CurveGraph& g, const Stratification& s, bool full) {
  json r = base("strata");
  r["graph"] = graph_block(g);
  r["by_codim"] = counts_pairs(s.by_codim);
  r["total"] = static_cast<long long>(s.strata.size());
  if (full) {
    json list = json::array();
    for (const Stratum& st : s.strata) {
      list.push_back({{"codim", st.codim},
                      {"kept_edges", edge_id_list(g, st.kept_edges)},
                      {"e", st.e},
                      {"d", st.d},
                      {"dimension", stratum_dimension(st, g)}});
    }
    r["strata"] = std::move(list);
  }
  return r;
}

json cells_report(const CycleLattice& lattice, const CellEnumeration& cells, bool full) {
  const CurveGraph& g = *lattice.graph;
  json r = base("cells");
  r["graph"] = graph_block(g);
  r["lattice"] = {{"rank", lattice.rank()},
                  {"forest_edges", lattice.forest_edges},
                  {"cycle_edges", lattice.cycle_edges},
                  {"basis", lattice.basis},
                  {"gram", lattice.gram},
                  {"gram_determinant", gram_determinant(lattice).str()},
                  {"saturated", saturation_check(lattice)}};
  r["by_dim"] = counts_pairs(cells.by_dim);
  long long total = 0;
  for (const auto& [dim, count] : cells.by_dim) total += count;
  r["total"] = total;
  if (full) {
    json list = json::array();
    for (const DelaunayCell& cell : cells.representatives) {
      json verts = json::array();
      for (const auto& v : cell.vertices) verts.push_back(rational_strings(v));
      json sign = json::array();
      for (signed char x : cell.sign) sign.push_back(static_cast<int>(x));
      list.push_back({{"sign", std::move(sign)},
                      {"index", sign_index(cell.sign)},
                      {"dim", cell.dim},
                      {"vertex_count", static_cast<long long>(cell.vertices.size())},
                      {"vertices", std::move(verts)}});
    }
    r["cells"] = std::move(list);
  }
  return r;
}

json compare_report(const CurveGraph& g, const CompareReport& cmp) {
  json r = base("compare");
  r["graph"] = graph_block(g);
  r["strata_by_codim"] = counts_pairs(cmp.strata_by_codim);
  r["cells_by_codim"] = counts_pairs(cmp.cells_by_codim);
  r["match"] = cmp.match;
  // Cell representatives are drawn from unit-box sign vectors only; the
  // count comparison is the check that this range covers every
  // translation class, so the flag doubles as that assumption's status.
  r["unit_box_covers_all_classes"] = cmp.match;
  return r;
}

json check_report(const CurveGraph& g, const GeneratingSubgraph& sub,
                  const NormalizedMultidegree& e) {
  const Classification abs = check_abs(e, sub);
  const Classification edges = check_edges(e, sub);
  const Classification comp = check_componentwise(e, sub);
  const auto orient = realize_orientation(e, sub);

  json r = base("check");
  r["graph"] = graph_block(g);
  r["kept_edges"] = edge_id_list(g, sub.kept);
  r["e"] = e.values;
  r["d"] = denormalize(e, g).values;
  r["verdict"] = to_string(abs.verdict);
  r["witness"] = witness_field(g, abs);
  r["routes"] = {{"abs", to_string(abs.verdict)},
                 {"edges", to_string(edges.verdict)},
                 {"componentwise", to_string(comp.verdict)},
                 {"orientation_exists", orient.has_value()}};
  bool agree = abs.verdict == edges.verdict;
  agree = agree && (orient.has_value() == (abs.verdict != Verdict::Unstable));
  r["agree"] = agree;
  if (orient) {
    json arrows = json::array();
    for (int ei = 0; ei < g.edge_count(); ++ei) {
      if (!sub.keeps(ei)) continue;
      arrows.push_back({g.vertex(orient->tail(g, ei)).id, g.vertex(orient->head(g, ei)).id});
    }
    r["orientation"] = std::move(arrows);
  } else {
    r["orientation"] = nullptr;
  }
  return r;
}

json stability_report(const CurveGraph& g, const SheafModel& f, const Polarization& pol) {
  const SheafDegree deg = sheaf_degree(f, g);
  const Classification verdict = is_semistable_L(f, pol, g);
  json r = base("stability");
  r["graph"] = graph_block(g);
  r["kept_edges"] = edge_id_list(g, f.subgraph);
  r["dprime"] = f.dprime;
  r["lambda"] = pol.lambda;
  r["chi"] = deg.chi;
  r["degree"] = deg.degree;
  r["verdict"] = to_string(verdict.verdict);
  r["witness"] = witness_field(g, verdict);
  return r;
}

json phi_report(const CurveGraph& g, const PhiInputs& in, const PhiVector& phi) {
  json r = base("phi");
  r["graph"] = graph_block(g);
  r["lambda"] = in.lambda;
  r["omega"] = in.omega;
  r["degree"] = in.degree;
  r["d_split"] = in.d_split ? json(*in.d_split) : json(nullptr);
  r["twist"] = in.twist ? json(*in.twist) : json(nullptr);
  r["phi"] = rational_strings(phi.phi);
  r["canonical"] = rational_strings(phi.canonical);
  Rational sum = 0;
  for (const Rational& q : phi.phi) sum += q;
  r["phi_sum"] = rational_to_string(sum);
  return r;
}

namespace {

std::string table_info(const json& r) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"vertices", r["vertex_count"].dump()});
  rows.push_back({"edges", r["edge_count"].dump()});
  rows.push_back({"components", r["component_count"].dump()});
  rows.push_back({"cyclomatic number", r["cyclomatic_number"].dump()});
  rows.push_back({"arithmetic genus", r["arithmetic_genus"].dump()});
  rows.push_back({"genus sum", r["genus_sum"].dump()});
  rows.push_back({"forest", r["is_forest"].get<bool>() ? "yes" : "no"});
  rows.push_back({"dualizing multidegree", joined(r["dualizing_multidegree"])});
  std::string out = format_rows(rows);
  out += "\nvertex  genus\n";
  std::vector<std::vector<std::string>> vrows;
  for (const auto& v : r["graph"]["vertices"])
    vrows.push_back({v["id"].get<std::string>(), v["genus"].dump()});
  out += format_rows(vrows);
  out += "\nedge  endpoints\n";
  std::vector<std::vector<std::string>> erows;
  int id = 0;
  for (const auto& e : r["graph"]["edges"])
    erows.push_back({std::to_string(id++), joined(e, " -- ")});
  out += format_rows(erows);
  return out;
}

std::string table_counts(const json& pairs, const char* left, const char* right) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({left, right});
  for (const auto& pair : pairs) rows.push_back({pair[0].dump(), pair[1].dump()});
  return format_rows(rows);
}

std::string table_strata(const json& r) {
  std::string out = table_counts(r["by_codim"], "codim", "strata");
  out += "total  " + r["total"].dump() + "\n";
  if (r.contains("strata")) {
    out += "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"codim", "kept edges", "e", "d", "dim"});
    for (const auto& s : r["strata"]) {
      rows.push_back({s["codim"].dump(), "{" + joined(s["kept_edges"]) + "}",
                      "(" + joined(s["e"]) + ")", "(" + joined(s["d"]) + ")",
                      s["dimension"].dump()});
    }
    out += format_rows(rows);
  }
  return out;
}

std::string table_cells(const json& r) {
  std::string out = "lattice rank  " + r["lattice"]["rank"].dump() + "\n";
  out += "gram determinant  " + r["lattice"]["gram_determinant"].get<std::string>() + "\n\n";
  out += table_counts(r["by_dim"], "dim", "cells");
  out += "total  " + r["total"].dump() + "\n";
  if (r.contains("cells")) {
    out += "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"dim", "sign", "vertices"});
    for (const auto& c : r["cells"]) {
      rows.push_back({c["dim"].dump(), "(" + joined(c["sign"]) + ")",
                      std::to_string(c["vertices"].size())});
    }
    out += format_rows(rows);
  }
  return out;
}

std::string table_compare(const json& r) {
  std::map<long long, std::pair<std::string, std::string>> merged;
  for (const auto& pair : r["strata_by_codim"])
    merged[pair[0].get<long long>()].first = pair[1].dump();
  for (const auto& pair : r["cells_by_codim"])
    merged[pair[0].get<long long>()].second = pair[1].dump();
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"codim", "strata", "cells"});
  for (const auto& [codim, counts] : merged) {
    rows.push_back({std::to_string(codim), counts.first.empty() ? "0" : counts.first,
                    counts.second.empty() ? "0" : counts.second});
  }
  std::string out = format_rows(rows);
  out += std::string("match  ") + (r["match"].get<bool>() ? "yes" : "no") + "\n";
  out += std::string("unit box covers all classes  ") +
         (r["unit_box_covers_all_classes"].get<bool>() ? "yes" : "no") + "\n";
  return out;
}

std::string table_check(const json& r) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"e", "(" + joined(r["e"]) + ")"});
  rows.push_back({"d", "(" + joined(r["d"]) + ")"});
  rows.push_back({"kept edges", "{" + joined(r["kept_edges"]) + "}"});
  rows.push_back({"verdict", r["verdict"].get<std::string>()});
  rows.push_back({"witness", r["witness"].is_null() ? "-" : "{" + joined(r["witness"]) + "}"});
  rows.push_back({"routes agree", r["agree"].get<bool>() ? "yes" : "no"});
  std::string out = format_rows(rows);
  if (!r["orientation"].is_null()) {
    out += "\norientation\n";
    std::vector<std::vector<std::string>> arrows;
    for (const auto& a : r["orientation"]) arrows.push_back({joined(a, " -> ")});
    out += format_rows(arrows);
  }
  return out;
}

std::string table_stability(const json& r) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"kept edges", "{" + joined(r["kept_edges"]) + "}"});
  rows.push_back({"d'", "(" + joined(r["dprime"]) + ")"});
  rows.push_back({"lambda", "(" + joined(r["lambda"]) + ")"});
  rows.push_back({"chi", r["chi"].dump()});
  rows.push_back({"degree", r["degree"].dump()});
  rows.push_back({"verdict", r["verdict"].get<std::string>()});
  rows.push_back({"witness", r["witness"].is_null() ? "-" : "{" + joined(r["witness"]) + "}"});
  return format_rows(rows);
}

std::string table_phi(const json& r) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"vertex", "phi", "canonical"});
  const auto& vertices = r["graph"]["vertices"];
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    rows.push_back({vertices[i]["id"].get<std::string>(), r["phi"][i].get<std::string>(),
                    r["canonical"][i].get<std::string>()});
  }
  std::string out = format_rows(rows);
  out += "phi sum  " + r["phi_sum"].get<std::string>() + "\n";
  return out;
}

}  // namespace

std::string render_table(const json& report) {
  const std::string command = report.value("command", "");
  if (command == "info") return table_info(report);
  if (command == "strata") return table_strata(report);
  if (command == "cells") return table_cells(report);
  if (command == "compare") return table_compare(report);
  if (command == "check") return table_check(report);
  if (command == "stability") return table_stability(report);
  if (command == "phi") return table_phi(report);
  return report.dump(2) + "\n";
}

}  // namespace jacstrat::reports
