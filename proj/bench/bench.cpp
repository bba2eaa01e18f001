// Wall-clock comparison of the serial reference enumerations against the
// OpenMP kernels, on inputs large enough for the schedule to matter.
// Prints one line per (workload, implementation) and verifies that both
// implementations produce identical output before reporting.

#include <chrono>
#include <cstdio>
#include <string>

#include "jacstrat/delaunay.hpp"
#include "jacstrat/examples_suite.hpp"
#include "jacstrat/stratification.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace jacstrat;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Two triangles joined by a fat bundle of parallel edges: h = 10 with 14
// edges, so the subgraph stream has 16384 entries of uneven cost.
CurveGraph strata_workload() {
  std::vector<Vertex> vs;
  for (int i = 0; i < 6; ++i) vs.push_back({"v" + std::to_string(i), 0});
  std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  for (int i = 0; i < 8; ++i) es.push_back({0, 3});
  return CurveGraph(std::move(vs), std::move(es));
}

long long strata_checksum(const Stratification& s) {
  long long sum = 0;
  for (const auto& st : s.strata) {
    sum = sum * 31 + st.codim;
    sum += static_cast<long long>(st.kept_edges % 1000003);
    for (long long e : st.e) sum = sum * 7 + e;
  }
  return sum;
}

long long cells_checksum(const CellEnumeration& c) {
  long long sum = 0;
  for (const auto& cell : c.representatives) {
    sum = sum * 31 + cell.dim;
    sum = sum * 7 + static_cast<long long>(cell.vertices.size());
    sum += static_cast<long long>(sign_index(cell.sign) % 1000003);
  }
  return sum;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both rows run serially\n");
#endif

  {
    const auto g = strata_workload();
    StrataOptions opt;
    opt.max_edges = g.edge_count();

    auto t0 = Clock::now();
    const auto serial = enumerate_strata_serial(g, opt);
    const double ts = seconds_since(t0);

    t0 = Clock::now();
    const auto parallel = enumerate_strata(g, opt);
    const double tp = seconds_since(t0);

    if (strata_checksum(serial) != strata_checksum(parallel) ||
        serial.strata.size() != parallel.strata.size()) {
      std::printf("strata: OUTPUT MISMATCH\n");
      return 1;
    }
    std::printf("strata  %2d edges, %6zu strata   serial %7.3fs   parallel %7.3fs   speedup %.2fx\n",
                g.edge_count(), serial.strata.size(), ts, tp, ts / tp);
  }

  {
    const auto g = example_parallel_edges(6);
    const auto lat = build_lattice(g);
    CellOptions opt;
    opt.max_edges = 6;

    auto t0 = Clock::now();
    const auto serial = enumerate_cells_serial(lat, opt);
    const double ts = seconds_since(t0);

    t0 = Clock::now();
    const auto parallel = enumerate_cells(lat, opt);
    const double tp = seconds_since(t0);

    if (cells_checksum(serial) != cells_checksum(parallel) ||
        serial.representatives.size() != parallel.representatives.size()) {
      std::printf("cells: OUTPUT MISMATCH\n");
      return 1;
    }
    std::printf("cells   %2d edges, %6zu classes  serial %7.3fs   parallel %7.3fs   speedup %.2fx\n",
                lat.graph->edge_count(), serial.representatives.size(), ts, tp, ts / tp);
  }

  return 0;
}
