#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "jacstrat/errors.hpp"

namespace jacstrat {

/// One irreducible component of a nodal curve: a named vertex of the dual
/// graph carrying the geometric genus of the component's normalization.
struct Vertex {
  std::string id;
  long long genus = 0;
};

/// One node of the curve: an edge between the two components it joins
/// (possibly the same one, giving a loop). The stored endpoint order fixes
/// the reference direction "first -> second" used by orientations and by
/// the cycle lattice.
struct Edge {
  int first = 0;
  int second = 0;

  bool is_loop() const { return first == second; }
  int other(int v) const { return v == first ? second : first; }
};

/// Dual graph of a nodal curve: a multigraph with loops and parallel edges
/// allowed, plus a per-vertex genus. The graph may be disconnected.
/// Immutable after construction. Edge ids are 0-based input positions and
/// stay stable through every operation in the library.
class CurveGraph {
 public:
  CurveGraph() = default;

  /// Build from vertices and edges given by vertex index. Validates index
  /// ranges, nonnegative genera and unique ids.
  CurveGraph(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges);

  /// Build from edges given by vertex id, with diagnostics that name the
  /// offending element ("edges[3]: unknown vertex id 'x'").
  static CurveGraph from_ids(std::vector<Vertex> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Vertex& vertex(int v) const { return vertices_.at(v); }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Index of a vertex id, or -1 when absent.
  int vertex_index(const std::string& id) const;

  /// Per-vertex count of incident edges with loops counted once. This is
  /// exactly the maximum indegree a vertex can take under an orientation.
  const std::vector<int>& incidence_counts() const { return incidences_; }

  /// Per-vertex number of loops.
  const std::vector<int>& loop_counts() const { return loops_; }

  long long genus_sum() const { return genus_sum_; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> incidences_;
  std::vector<int> loops_;
  long long genus_sum_ = 0;
};

/// A set of vertices, identified with the subcurve spanned by the
/// corresponding components. Backed by a bitmask over vertex indices.
struct VertexSet {
  std::uint64_t mask = 0;

  static VertexSet of_indices(const CurveGraph& g, const std::vector<int>& indices);
  static VertexSet of_ids(const CurveGraph& g, const std::vector<std::string>& ids);

  bool empty() const { return mask == 0; }
  int size() const;
  bool contains(int v) const { return (mask >> v) & 1u; }
  bool proper(const CurveGraph& g) const;
  std::vector<int> indices() const;
};

/// A subgraph with the full vertex set of its parent; only edges are
/// dropped. Deleting an edge separates the corresponding node of the
/// curve, so a generating subgraph encodes a partial normalization.
struct GeneratingSubgraph {
  const CurveGraph* graph = nullptr;
  std::uint64_t kept = 0;

  static GeneratingSubgraph full(const CurveGraph& g);
  static GeneratingSubgraph of_mask(const CurveGraph& g, std::uint64_t mask);
  static GeneratingSubgraph of_edges(const CurveGraph& g, const std::vector<int>& edge_ids);

  bool keeps(int e) const { return (kept >> e) & 1u; }
  int edge_count() const;
  std::vector<int> kept_edges() const;
};

/// Number of independent cycles h = E - V + (number of components).
/// Loops count as edges; an isolated vertex is its own component.
long long cyclomatic_number(const CurveGraph& g);
long long cyclomatic_number(const GeneratingSubgraph& sub);

/// Arithmetic genus g = sum(genus_i) + E - V + 1, i.e. 1 - chi(O). Valid
/// for disconnected graphs too (two smooth components with no edges have
/// genus g1 + g2 - 1).
long long arithmetic_genus(const CurveGraph& g);

/// Genus of the partial normalization given by a generating subgraph.
long long arithmetic_genus(const GeneratingSubgraph& sub);

/// Connected components as sorted vertex index lists, ordered by smallest
/// member. Loops do not connect anything; isolated vertices appear as
/// singletons. The empty graph has no components.
std::vector<std::vector<int>> connected_components(const CurveGraph& g);
std::vector<std::vector<int>> connected_components(const GeneratingSubgraph& sub);
int component_count(const CurveGraph& g);
int component_count(const GeneratingSubgraph& sub);

struct SubcurveStats {
  long long internal_edges = 0;  // both endpoints in D; loops on D are internal
  long long crossing_edges = 0;  // exactly one endpoint in D; loops never cross
};

/// Edge counts of a subcurve D inside a generating subgraph. D must be
/// nonempty.
SubcurveStats subcurve_stats(const GeneratingSubgraph& sub, const VertexSet& d);
SubcurveStats subcurve_stats(const CurveGraph& g, const VertexSet& d);

inline constexpr int kDefaultSubgraphCap = 24;

/// Number of generating subgraphs (2^E), after checking the cap.
std::uint64_t generating_subgraph_count(const CurveGraph& g, int max_edges = kDefaultSubgraphCap);

/// Visit all 2^E generating subgraphs in ascending edge-bitmask order.
/// The stream is restartable: it is driven purely by the mask counter.
void for_each_generating_subgraph(const CurveGraph& g,
                                  const std::function<void(const GeneratingSubgraph&)>& fn,
                                  int max_edges = kDefaultSubgraphCap);

/// Materialized version of the stream above, same order.
std::vector<GeneratingSubgraph> generating_subgraphs(const CurveGraph& g,
                                                     int max_edges = kDefaultSubgraphCap);

}  // namespace jacstrat
