#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jacstrat/delaunay.hpp"
#include "jacstrat/examples_suite.hpp"
#include "jacstrat/stratification.hpp"

using namespace jacstrat;

namespace {

// Medium graphs where the parallel schedule actually interleaves.
std::vector<CurveGraph> medium_graphs() {
  std::vector<CurveGraph> out;
  out.push_back(example_parallel_edges(6));
  out.push_back(example_irreducible_nodes(5));
  // Wheel with doubled spokes: hub plus a 3-cycle rim.
  out.push_back(CurveGraph({{"hub", 1}, {"r0", 0}, {"r1", 0}, {"r2", 0}},
                           {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}));
  return out;
}

bool same_strata(const Stratification& a, const Stratification& b) {
  if (a.by_codim != b.by_codim) return false;
  if (a.strata.size() != b.strata.size()) return false;
  for (std::size_t i = 0; i < a.strata.size(); ++i) {
    if (a.strata[i].kept_edges != b.strata[i].kept_edges) return false;
    if (a.strata[i].e != b.strata[i].e) return false;
    if (a.strata[i].d != b.strata[i].d) return false;
    if (a.strata[i].codim != b.strata[i].codim) return false;
  }
  return true;
}

bool same_cells(const CellEnumeration& a, const CellEnumeration& b) {
  if (a.by_dim != b.by_dim) return false;
  if (a.representatives.size() != b.representatives.size()) return false;
  for (std::size_t i = 0; i < a.representatives.size(); ++i) {
    if (a.representatives[i].sign != b.representatives[i].sign) return false;
    if (a.representatives[i].dim != b.representatives[i].dim) return false;
    if (a.representatives[i].vertices != b.representatives[i].vertices) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("strata output is identical for every job count") {
  for (const auto& g : medium_graphs()) {
    const auto reference = enumerate_strata_serial(g);
    for (int jobs = 1; jobs <= 4; ++jobs) {
      StrataOptions opt;
      opt.jobs = jobs;
      CHECK(same_strata(reference, enumerate_strata(g, opt)));
    }
  }
}

TEST_CASE("cell output is identical for every job count") {
  for (const auto& g : medium_graphs()) {
    if (g.edge_count() > 6) continue;
    const auto lat = build_lattice(g);
    const auto reference = enumerate_cells_serial(lat);
    for (int jobs = 1; jobs <= 4; ++jobs) {
      CellOptions opt;
      opt.jobs = jobs;
      CHECK(same_cells(reference, enumerate_cells(lat, opt)));
    }
  }
}

TEST_CASE("examples suite passes under a parallel schedule") {
  const auto report = run_examples_suite("", 4);
  CHECK(report.all_pass);
  for (const auto& row : report.rows) {
    CAPTURE(row.name);
    CHECK(row.pass());
  }
}

TEST_CASE("examples suite catches an injected failure") {
  const auto report = run_examples_suite("dollar-sign", 2);
  CHECK_FALSE(report.all_pass);
  bool found = false;
  for (const auto& row : report.rows) {
    if (row.name == "dollar-sign") {
      found = true;
      CHECK_FALSE(row.pass());
      CHECK_FALSE(row.detail.empty());
    } else {
      CHECK(row.pass());
    }
  }
  CHECK(found);
}
