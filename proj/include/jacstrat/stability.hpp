#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jacstrat/curve_graph.hpp"

namespace jacstrat {

enum class Verdict { Stable, StrictlySemistable, Unstable };

const char* to_string(Verdict v);

/// Multidegree of a sheaf: one integer per vertex, in input vertex order.
struct Multidegree {
  std::vector<long long> values;
};

/// Normalized multidegree e_i = d_i - (genus_i - 1). Semistability at
/// degree g-1 depends only on this vector.
struct NormalizedMultidegree {
  std::vector<long long> values;
};

NormalizedMultidegree normalize(const Multidegree& d, const CurveGraph& g);
Multidegree denormalize(const NormalizedMultidegree& e, const CurveGraph& g);

/// Orientation of the kept edges of a generating subgraph. Bit i of
/// `backward` flips edge i to run second -> first; loops always keep their
/// single formal direction and contribute exactly one to the indegree of
/// their vertex.
struct Orientation {
  std::uint64_t edges = 0;     // kept-edge mask
  std::uint64_t backward = 0;  // subset of `edges`, loops excluded

  int head(const CurveGraph& g, int e) const;
  int tail(const CurveGraph& g, int e) const;
  std::vector<long long> indegrees(const CurveGraph& g) const;

  /// Reverse every non-loop arrow.
  Orientation reversed(const CurveGraph& g) const;
};

struct Classification {
  Verdict verdict = Verdict::Stable;
  // For unstable: the first violating subcurve (vertex mask, ascending
  // scan). For strictly semistable: the first subcurve meeting the bound
  // with equality.
  std::optional<std::uint64_t> witness;
};

inline constexpr int kDefaultVertexCap = 20;

/// Classify e by the two-sided bound |e_D - edges(D) - D(C-D)/2| vs
/// D(C-D)/2 over every proper nonempty subcurve D (strict for stable).
/// Evaluated with doubled integers; no floating point. Requires
/// sum(e) == edge count of the subgraph.
Classification check_abs(const NormalizedMultidegree& e, const GeneratingSubgraph& sub,
                         int max_vertices = kDefaultVertexCap);
Classification check_abs(const NormalizedMultidegree& e, const CurveGraph& g,
                         int max_vertices = kDefaultVertexCap);

/// Same classification via the one-sided bound e_D <= edges(D) + D(C-D)
/// over every proper nonempty D. Agrees with check_abs everywhere.
Classification check_edges(const NormalizedMultidegree& e, const GeneratingSubgraph& sub,
                           int max_vertices = kDefaultVertexCap);
Classification check_edges(const NormalizedMultidegree& e, const CurveGraph& g,
                           int max_vertices = kDefaultVertexCap);

/// Classification of e restricted to each connected component of the
/// subgraph separately (a component whose slice of e cannot be an
/// indegree vector makes the whole verdict unstable). Agrees with
/// check_abs on connected subgraphs; on disconnected ones it is the
/// component-product notion used by the stratification.
Classification check_componentwise(const NormalizedMultidegree& e, const GeneratingSubgraph& sub);

/// Find an orientation whose indegree vector is e, or nullopt when none
/// exists (exactly the unstable case). Deterministic: loops are forced,
/// the rest is a unit-capacity flow solved in edge-id order.
std::optional<Orientation> realize_orientation(const NormalizedMultidegree& e,
                                               const GeneratingSubgraph& sub);

/// True iff every proper nonempty subcurve has crossing arrows in both
/// directions. A cut with no crossing arrows at all counts as
/// one-directional, so nothing on a disconnected subgraph qualifies.
bool is_stable_orientation(const Orientation& o, const GeneratingSubgraph& sub,
                           int max_vertices = kDefaultVertexCap);

/// Componentwise variant: every component's restriction must be stable
/// (equivalently, every kept edge lies on a directed cycle).
bool is_stable_orientation_componentwise(const Orientation& o, const GeneratingSubgraph& sub);

/// Distinct indegree vectors of stable orientations, sorted
/// lexicographically. Empty whenever the subgraph is disconnected.
std::vector<std::vector<long long>> stable_multidegrees(const GeneratingSubgraph& sub);

/// Distinct indegree vectors of componentwise-stable orientations: the
/// cartesian product of the per-component stable sets. This is the set
/// the stratification enumerates.
std::vector<std::vector<long long>> componentwise_stable_multidegrees(const GeneratingSubgraph& sub);

/// Independent route to the same set as stable_multidegrees: scan every
/// e in the indegree box (0 <= e_i <= incidences, sum = edge count) and
/// keep those check_abs classifies as stable. Used as a self-check.
std::vector<std::vector<long long>> stable_multidegrees_by_filter(const GeneratingSubgraph& sub);

}  // namespace jacstrat
