#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "jacstrat/stability.hpp"

namespace jacstrat {

/// One stratum of the degree-(g-1) compactified Jacobian: a generating
/// subgraph together with a componentwise-stable normalized multidegree
/// on it. d is the corresponding plain multidegree, codim the cyclomatic
/// defect h(G) - h(subgraph).
struct Stratum {
  std::uint64_t kept_edges = 0;
  std::vector<long long> e;
  std::vector<long long> d;
  int codim = 0;
};

struct Stratification {
  std::vector<Stratum> strata;          // sorted by (codim, kept_edges, e)
  std::map<int, long long> by_codim;    // codim -> stratum count
};

struct StrataOptions {
  int max_edges = 16;  // refuse larger graphs unless raised explicitly
  int jobs = 0;        // 0 = library default thread count
};

/// Enumerate every stratum: one per (generating subgraph, componentwise-
/// stable multidegree) pair. Parallel over subgraphs when OpenMP is
/// enabled; output is identical to the serial reference for any job count.
Stratification enumerate_strata(const CurveGraph& g, const StrataOptions& opt = {});

/// Serial reference implementation, kept for testing and benchmarks.
Stratification enumerate_strata_serial(const CurveGraph& g, const StrataOptions& opt = {});

/// Fast path for forests (h = 0): the single stratum with the edgeless
/// subgraph and e = 0. Rejects graphs with cycles.
Stratification strata_for_forest(const CurveGraph& g);

/// Dimension of a stratum: genus sum of the graph plus h(subgraph); this
/// is the dimension of the Jacobian torsor of the partial normalization,
/// and equals g - codim whenever the graph is connected.
long long stratum_dimension(const Stratum& s, const CurveGraph& g);

}  // namespace jacstrat
