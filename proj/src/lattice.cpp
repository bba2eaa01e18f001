#include "jacstrat/lattice.hpp"

#include <algorithm>

#include "jacstrat/errors.hpp"
#include "jacstrat/exact_linalg.hpp"

namespace jacstrat {

namespace {

// Walk the forest from `from` to `to` and add the path to `row` with sign
// +1 along an edge's reference direction, -1 against it. The forest is
// given as an adjacency list of (neighbor, edge id).
void add_forest_path(const CurveGraph& g,
                     const std::vector<std::vector<std::pair<int, int>>>& forest_adj, int from,
                     int to, std::vector<int>& row) {
  if (from == to) return;
  const int n = g.vertex_count();
  std::vector<int> parent_vertex(n, -1), parent_edge(n, -1);
  std::vector<int> stack{from};
  parent_vertex[from] = from;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (u == to) break;
    for (const auto& [w, eid] : forest_adj[u]) {
      if (parent_vertex[w] < 0) {
        parent_vertex[w] = u;
        parent_edge[w] = eid;
        stack.push_back(w);
      }
    }
  }
  if (parent_vertex[to] < 0)
    throw InvariantError("cycle edge endpoints fell in different forest components");
  for (int u = to; u != from; u = parent_vertex[u]) {
    const int eid = parent_edge[u];
    // Traversing the path backwards: the step parent -> u uses edge eid,
    // along its reference direction iff u is the second endpoint.
    row[eid] += (g.edge(eid).second == u && g.edge(eid).first == parent_vertex[u]) ? 1 : -1;
  }
}

}  // namespace

CycleLattice build_lattice(const CurveGraph& g) {
  CycleLattice lat;
  lat.graph = &g;

  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > 62) throw CapExceededError("cycle lattice: " + std::to_string(m) + " edges exceeds 62");

  // Kruskal-style forest in edge-id order; loops and cycle-closers become
  // basis rows.
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = i;
  const auto find = [&comp](int x) {
    while (comp[x] != x) {
      comp[x] = comp[comp[x]];
      x = comp[x];
    }
    return x;
  };
  std::vector<std::vector<std::pair<int, int>>> forest_adj(n);
  for (int e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    const int a = find(ed.first), b = find(ed.second);
    if (a != b) {
      comp[std::max(a, b)] = std::min(a, b);
      lat.forest_edges.push_back(e);
      forest_adj[ed.first].push_back({ed.second, e});
      forest_adj[ed.second].push_back({ed.first, e});
    } else {
      lat.cycle_edges.push_back(e);
    }
  }

  for (int e : lat.cycle_edges) {
    std::vector<int> row(m, 0);
    row[e] = 1;
    if (!g.edge(e).is_loop())
      add_forest_path(g, forest_adj, g.edge(e).second, g.edge(e).first, row);
    lat.basis.push_back(std::move(row));
  }

  const int h = lat.rank();
  lat.gram.assign(h, std::vector<long long>(h, 0));
  for (int i = 0; i < h; ++i) {
    for (int j = i; j < h; ++j) {
      long long dot = 0;
      for (int e = 0; e < m; ++e) dot += static_cast<long long>(lat.basis[i][e]) * lat.basis[j][e];
      lat.gram[i][j] = lat.gram[j][i] = dot;
    }
  }
  return lat;
}

bool saturation_check(const CycleLattice& lattice) {
  if (lattice.rank() == 0) return true;
  linalg::IntMatrix b(lattice.rank());
  for (int i = 0; i < lattice.rank(); ++i)
    b[i].assign(lattice.basis[i].begin(), lattice.basis[i].end());
  for (const BigInt& factor : linalg::smith_invariant_factors(b)) {
    if (factor != 1) return false;
  }
  return true;
}

BigInt gram_determinant(const CycleLattice& lattice) {
  linalg::IntMatrix m(lattice.rank());
  for (int i = 0; i < lattice.rank(); ++i)
    m[i].assign(lattice.gram[i].begin(), lattice.gram[i].end());
  return linalg::determinant(std::move(m));
}

}  // namespace jacstrat
