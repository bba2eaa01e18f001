#pragma once

#include <string>
#include <vector>

#include "jacstrat/curve_graph.hpp"

// Built-in example curves with known stratum and cell tables, used by the
// `examples` CLI command and the test suite. Each row rebuilds its curve,
// runs the stratification and the cell enumeration, and compares against
// the expected tables.

namespace jacstrat {

struct ExampleRow {
  std::string name;
  bool strata_ok = false;
  bool cells_ok = false;
  bool compare_ok = false;
  std::string detail;  // first mismatch, empty when everything matched

  bool pass() const { return strata_ok && cells_ok && compare_ok; }
};

struct ExamplesReport {
  std::vector<ExampleRow> rows;
  bool all_pass = false;
};

/// Run the whole suite. `inject_failure` perturbs the expected table of
/// the named row, for testing the failure path; empty means run honestly.
ExamplesReport run_examples_suite(const std::string& inject_failure = "", int jobs = 0);

/// The example curves themselves, exposed for tests and documentation.
CurveGraph example_two_components();          // two vertices, one edge
CurveGraph example_forest();                  // two trees, six vertices
CurveGraph example_irreducible_one_node();    // one vertex, one loop
CurveGraph example_irreducible_nodes(int n);  // one vertex, n loops
CurveGraph example_dollar_sign();             // two vertices, three parallel edges
CurveGraph example_parallel_edges(int n);     // two vertices, n parallel edges

}  // namespace jacstrat
