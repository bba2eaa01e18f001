#include "jacstrat/examples_suite.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "jacstrat/delaunay.hpp"
#include "jacstrat/stratification.hpp"

namespace jacstrat {

namespace {

using CountTable = std::map<int, long long>;

std::string table_text(const CountTable& t) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [key, value] : t) {
    if (!first) out << ", ";
    first = false;
    out << key << ": " << value;
  }
  out << "}";
  return out.str();
}

struct ExampleCase {
  std::string name;
  std::function<CurveGraph()> build;
  CountTable strata_by_codim;  // expected
  CountTable cells_by_dim;     // expected
};

// The expected tables are closed forms. A chain of n parallel edges
// ("banana"): k kept edges admit the indegree splits (1, k-1) .. (k-1, 1),
// so codim n-k holds C(n,k) * (k-1) strata for k >= 2, one stratum for
// k = 0 and none for k = 1. A vertex with n loops: every loop subset is
// its own stratum, C(n, k) at codim n-k, and the cells are the faces of
// the unit cube, C(n, k) classes in dimension k.
std::vector<ExampleCase> example_table() {
  std::vector<ExampleCase> rows;

  rows.push_back({"two-components", example_two_components, {{0, 1}}, {{0, 1}}});
  rows.push_back({"forest", example_forest, {{0, 1}}, {{0, 1}}});
  rows.push_back({"one-node", example_irreducible_one_node, {{0, 1}, {1, 1}}, {{0, 1}, {1, 1}}});
  rows.push_back({"two-nodes",
                  [] { return example_irreducible_nodes(2); },
                  {{0, 1}, {1, 2}, {2, 1}},
                  {{0, 1}, {1, 2}, {2, 1}}});
  rows.push_back({"three-nodes",
                  [] { return example_irreducible_nodes(3); },
                  {{0, 1}, {1, 3}, {2, 3}, {3, 1}},
                  {{0, 1}, {1, 3}, {2, 3}, {3, 1}}});
  rows.push_back({"four-nodes",
                  [] { return example_irreducible_nodes(4); },
                  {{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}},
                  {{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}}});
  rows.push_back({"dollar-sign",
                  example_dollar_sign,
                  {{0, 2}, {1, 3}, {2, 1}},
                  {{0, 1}, {1, 3}, {2, 2}}});
  rows.push_back({"two-edge-banana",
                  [] { return example_parallel_edges(2); },
                  {{0, 1}, {1, 1}},
                  {{0, 1}, {1, 1}}});
  rows.push_back({"four-edge-banana",
                  [] { return example_parallel_edges(4); },
                  {{0, 3}, {1, 8}, {2, 6}, {3, 1}},
                  {{0, 1}, {1, 6}, {2, 8}, {3, 3}}});

  return rows;
}

}  // namespace

CurveGraph example_two_components() {
  return CurveGraph({{"a", 1}, {"b", 2}}, {{0, 1}});
}

CurveGraph example_forest() {
  return CurveGraph({{"a", 0}, {"b", 1}, {"c", 0}, {"d", 2}, {"e", 0}, {"f", 1}},
                    {{0, 1}, {1, 2}, {3, 4}, {3, 5}});
}

CurveGraph example_irreducible_one_node() {
  return example_irreducible_nodes(1);
}

CurveGraph example_irreducible_nodes(int n) {
  if (n < 0) throw ValidationError("node count must be nonnegative");
  std::vector<std::pair<int, int>> loops(n, {0, 0});
  return CurveGraph({{"a", 1}}, std::move(loops));
}

CurveGraph example_dollar_sign() {
  return example_parallel_edges(3);
}

CurveGraph example_parallel_edges(int n) {
  if (n < 1) throw ValidationError("edge count must be positive");
  std::vector<std::pair<int, int>> edges(n, {0, 1});
  return CurveGraph({{"a", 0}, {"b", 0}}, std::move(edges));
}

ExamplesReport run_examples_suite(const std::string& inject_failure, int jobs) {
  ExamplesReport report;
  report.all_pass = true;

  for (ExampleCase& ex : example_table()) {
    if (ex.name == inject_failure) ++ex.strata_by_codim[0];

    ExampleRow row;
    row.name = ex.name;
    const CurveGraph g = ex.build();

    StrataOptions sopt;
    sopt.jobs = jobs;
    const CountTable strata = enumerate_strata(g, sopt).by_codim;
    row.strata_ok = strata == ex.strata_by_codim;
    if (!row.strata_ok)
      row.detail = "strata by codim: got " + table_text(strata) + ", expected " +
                   table_text(ex.strata_by_codim);

    CellOptions copt;
    copt.jobs = jobs;
    const CountTable cells = enumerate_cells(build_lattice(g), copt).by_dim;
    row.cells_ok = cells == ex.cells_by_dim;
    if (!row.cells_ok && row.detail.empty())
      row.detail = "cells by dim: got " + table_text(cells) + ", expected " +
                   table_text(ex.cells_by_dim);

    row.compare_ok = compare_with_strata(g, sopt.max_edges, copt.max_edges, jobs).match;
    if (!row.compare_ok && row.detail.empty())
      row.detail = "stratum and cell counts disagree per codimension";

    report.all_pass = report.all_pass && row.pass();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace jacstrat
