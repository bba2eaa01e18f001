#include "jacstrat/stratification.hpp"

#include <algorithm>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jacstrat {

namespace {

void require_strata_cap(const CurveGraph& g, int max_edges) {
  const int hard_cap = std::min(max_edges, 62);
  if (g.edge_count() > hard_cap)
    throw CapExceededError("strata enumeration: " + std::to_string(g.edge_count()) +
                           " edges exceeds cap " + std::to_string(hard_cap));
}

std::vector<Stratum> strata_of_mask(const CurveGraph& g, std::uint64_t mask, long long h_total) {
  const auto sub = GeneratingSubgraph::of_mask(g, mask);
  const int codim = static_cast<int>(h_total - cyclomatic_number(sub));
  std::vector<Stratum> out;
  for (auto& e : componentwise_stable_multidegrees(sub)) {
    Stratum s;
    s.kept_edges = mask;
    s.d = denormalize(NormalizedMultidegree{e}, g).values;
    s.e = std::move(e);
    s.codim = codim;
    out.push_back(std::move(s));
  }
  return out;
}

Stratification finalize(std::vector<Stratum> strata) {
  std::sort(strata.begin(), strata.end(), [](const Stratum& a, const Stratum& b) {
    return std::tie(a.codim, a.kept_edges, a.e) < std::tie(b.codim, b.kept_edges, b.e);
  });
  Stratification out;
  for (const Stratum& s : strata) ++out.by_codim[s.codim];
  out.strata = std::move(strata);
  return out;
}

}  // namespace

Stratification enumerate_strata_serial(const CurveGraph& g, const StrataOptions& opt) {
  require_strata_cap(g, opt.max_edges);
  const long long h_total = cyclomatic_number(g);
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  std::vector<Stratum> strata;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto batch = strata_of_mask(g, mask, h_total);
    strata.insert(strata.end(), std::make_move_iterator(batch.begin()),
                  std::make_move_iterator(batch.end()));
  }
  return finalize(std::move(strata));
}

Stratification enumerate_strata(const CurveGraph& g, const StrataOptions& opt) {
#ifndef _OPENMP
  return enumerate_strata_serial(g, opt);
#else
  require_strata_cap(g, opt.max_edges);
  const long long h_total = cyclomatic_number(g);
  const long long total = 1ll << g.edge_count();
  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();

  std::vector<Stratum> strata;
#pragma omp parallel num_threads(threads)
  {
    std::vector<Stratum> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (long long mask = 0; mask < total; ++mask) {
      auto batch = strata_of_mask(g, static_cast<std::uint64_t>(mask), h_total);
      local.insert(local.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
    }
#pragma omp critical(jacstrat_strata_merge)
    strata.insert(strata.end(), std::make_move_iterator(local.begin()),
                  std::make_move_iterator(local.end()));
  }
  // The merge order above varies with scheduling; the total sort in
  // finalize makes the result identical for every thread count.
  return finalize(std::move(strata));
#endif
}

Stratification strata_for_forest(const CurveGraph& g) {
  const long long h = cyclomatic_number(g);
  if (h != 0)
    throw ValidationError("forest fast path: graph has " + std::to_string(h) +
                          " independent cycles");
  Stratum s;
  s.kept_edges = 0;
  s.e.assign(g.vertex_count(), 0);
  s.d = denormalize(NormalizedMultidegree{s.e}, g).values;
  s.codim = 0;
  Stratification out;
  out.strata.push_back(std::move(s));
  out.by_codim[0] = 1;
  return out;
}

long long stratum_dimension(const Stratum& s, const CurveGraph& g) {
  return g.genus_sum() + cyclomatic_number(GeneratingSubgraph::of_mask(g, s.kept_edges));
}

}  // namespace jacstrat
