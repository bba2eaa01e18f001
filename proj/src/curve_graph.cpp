#include "jacstrat/curve_graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace jacstrat {

namespace {

// Minimal union-find over vertex indices.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // smaller index wins, keeps ordering stable
    parent[b] = a;
    return true;
  }
};

int components_under_mask(const CurveGraph& g, std::uint64_t kept) {
  const int v = g.vertex_count();
  UnionFind uf(v);
  int merges = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!((kept >> e) & 1u)) continue;
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    if (uf.unite(ed.first, ed.second)) ++merges;
  }
  return v - merges;
}

std::vector<std::vector<int>> components_list(const CurveGraph& g, std::uint64_t kept) {
  const int v = g.vertex_count();
  UnionFind uf(v);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!((kept >> e) & 1u)) continue;
    const Edge& ed = g.edge(e);
    if (!ed.is_loop()) uf.unite(ed.first, ed.second);
  }
  std::unordered_map<int, int> slot;
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < v; ++i) {
    const int root = uf.find(i);
    auto it = slot.find(root);
    if (it == slot.end()) {
      slot.emplace(root, static_cast<int>(comps.size()));
      comps.push_back({i});
    } else {
      comps[it->second].push_back(i);
    }
  }
  // Roots are the smallest member of their class, so components come out
  // already ordered by smallest vertex; members are ascending by scan.
  return comps;
}

std::uint64_t full_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

CurveGraph::CurveGraph(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)) {
  const int v = vertex_count();
  std::unordered_map<std::string, int> seen;
  for (int i = 0; i < v; ++i) {
    if (vertices_[i].genus < 0)
      throw ValidationError("vertices[" + std::to_string(i) + "]: genus must be nonnegative");
    if (!seen.emplace(vertices_[i].id, i).second)
      throw ValidationError("vertices[" + std::to_string(i) + "]: duplicate id '" +
                            vertices_[i].id + "'");
    genus_sum_ += vertices_[i].genus;
  }
  incidences_.assign(v, 0);
  loops_.assign(v, 0);
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    if (a < 0 || a >= v || b < 0 || b >= v)
      throw ValidationError("edges[" + std::to_string(i) + "]: vertex index out of range");
    edges_.push_back(Edge{a, b});
    if (a == b) {
      ++loops_[a];
      ++incidences_[a];  // a loop can absorb exactly one indegree
    } else {
      ++incidences_[a];
      ++incidences_[b];
    }
  }
}

CurveGraph CurveGraph::from_ids(std::vector<Vertex> vertices,
                                const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i].id, static_cast<int>(i)).second)
      throw ValidationError("vertices[" + std::to_string(i) + "]: duplicate id '" +
                            vertices[i].id + "'");
  }
  std::vector<std::pair<int, int>> by_index;
  by_index.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto resolve = [&](const std::string& id) {
      auto it = index.find(id);
      if (it == index.end())
        throw ValidationError("edges[" + std::to_string(i) + "]: unknown vertex id '" + id + "'");
      return it->second;
    };
    by_index.emplace_back(resolve(edges[i].first), resolve(edges[i].second));
  }
  return CurveGraph(std::move(vertices), std::move(by_index));
}

int CurveGraph::vertex_index(const std::string& id) const {
  for (int i = 0; i < vertex_count(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return -1;
}

VertexSet VertexSet::of_indices(const CurveGraph& g, const std::vector<int>& indices) {
  VertexSet s;
  for (int v : indices) {
    if (v < 0 || v >= g.vertex_count())
      throw ValidationError("vertex index " + std::to_string(v) + " out of range");
    s.mask |= std::uint64_t{1} << v;
  }
  return s;
}

VertexSet VertexSet::of_ids(const CurveGraph& g, const std::vector<std::string>& ids) {
  VertexSet s;
  for (const std::string& id : ids) {
    const int v = g.vertex_index(id);
    if (v < 0) throw ValidationError("unknown vertex id '" + id + "'");
    s.mask |= std::uint64_t{1} << v;
  }
  return s;
}

int VertexSet::size() const { return std::popcount(mask); }

bool VertexSet::proper(const CurveGraph& g) const {
  return mask != 0 && mask != full_mask(g.vertex_count());
}

std::vector<int> VertexSet::indices() const {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v) {
    if ((mask >> v) & 1u) out.push_back(v);
  }
  return out;
}

GeneratingSubgraph GeneratingSubgraph::full(const CurveGraph& g) {
  return GeneratingSubgraph{&g, full_mask(g.edge_count())};
}

GeneratingSubgraph GeneratingSubgraph::of_mask(const CurveGraph& g, std::uint64_t mask) {
  if (g.edge_count() > 64) throw CapExceededError("edge masks support at most 64 edges");
  if (mask & ~full_mask(g.edge_count()))
    throw ValidationError("subgraph mask references edges beyond the graph");
  return GeneratingSubgraph{&g, mask};
}

GeneratingSubgraph GeneratingSubgraph::of_edges(const CurveGraph& g,
                                                const std::vector<int>& edge_ids) {
  std::uint64_t mask = 0;
  for (int e : edge_ids) {
    if (e < 0 || e >= g.edge_count())
      throw ValidationError("edge id " + std::to_string(e) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << e;
    if (mask & bit) throw ValidationError("edge id " + std::to_string(e) + " listed twice");
    mask |= bit;
  }
  return GeneratingSubgraph{&g, mask};
}

int GeneratingSubgraph::edge_count() const { return std::popcount(kept); }

std::vector<int> GeneratingSubgraph::kept_edges() const {
  std::vector<int> out;
  for (int e = 0; e < graph->edge_count(); ++e) {
    if (keeps(e)) out.push_back(e);
  }
  return out;
}

long long cyclomatic_number(const CurveGraph& g) {
  return static_cast<long long>(g.edge_count()) - g.vertex_count() +
         components_under_mask(g, full_mask(g.edge_count()));
}

long long cyclomatic_number(const GeneratingSubgraph& sub) {
  return static_cast<long long>(sub.edge_count()) - sub.graph->vertex_count() +
         components_under_mask(*sub.graph, sub.kept);
}

long long arithmetic_genus(const CurveGraph& g) {
  return g.genus_sum() + g.edge_count() - g.vertex_count() + 1;
}

long long arithmetic_genus(const GeneratingSubgraph& sub) {
  return sub.graph->genus_sum() + sub.edge_count() - sub.graph->vertex_count() + 1;
}

std::vector<std::vector<int>> connected_components(const CurveGraph& g) {
  return components_list(g, full_mask(g.edge_count()));
}

std::vector<std::vector<int>> connected_components(const GeneratingSubgraph& sub) {
  return components_list(*sub.graph, sub.kept);
}

int component_count(const CurveGraph& g) {
  return components_under_mask(g, full_mask(g.edge_count()));
}

int component_count(const GeneratingSubgraph& sub) {
  return components_under_mask(*sub.graph, sub.kept);
}

SubcurveStats subcurve_stats(const GeneratingSubgraph& sub, const VertexSet& d) {
  if (d.empty()) throw ValidationError("subcurve must be nonempty");
  if (d.mask & ~full_mask(sub.graph->vertex_count()))
    throw ValidationError("subcurve references vertices beyond the graph");
  SubcurveStats stats;
  for (int e = 0; e < sub.graph->edge_count(); ++e) {
    if (!sub.keeps(e)) continue;
    const Edge& ed = sub.graph->edge(e);
    const bool a = d.contains(ed.first);
    const bool b = d.contains(ed.second);
    if (a && b)
      ++stats.internal_edges;
    else if (a || b)
      ++stats.crossing_edges;
  }
  return stats;
}

SubcurveStats subcurve_stats(const CurveGraph& g, const VertexSet& d) {
  return subcurve_stats(GeneratingSubgraph::full(g), d);
}

std::uint64_t generating_subgraph_count(const CurveGraph& g, int max_edges) {
  const int e = g.edge_count();
  if (e > max_edges)
    throw CapExceededError("generating subgraphs: " + std::to_string(e) +
                           " edges exceeds cap " + std::to_string(max_edges));
  return std::uint64_t{1} << e;
}

void for_each_generating_subgraph(const CurveGraph& g,
                                  const std::function<void(const GeneratingSubgraph&)>& fn,
                                  int max_edges) {
  const std::uint64_t total = generating_subgraph_count(g, max_edges);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    fn(GeneratingSubgraph{&g, mask});
  }
}

std::vector<GeneratingSubgraph> generating_subgraphs(const CurveGraph& g, int max_edges) {
  std::vector<GeneratingSubgraph> out;
  out.reserve(generating_subgraph_count(g, max_edges));
  for_each_generating_subgraph(
      g, [&out](const GeneratingSubgraph& sub) { out.push_back(sub); }, max_edges);
  return out;
}

}  // namespace jacstrat
