#include "jacstrat/delaunay.hpp"

#include <algorithm>
#include <set>

#include "jacstrat/exact_linalg.hpp"
#include "jacstrat/stratification.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jacstrat {

namespace {

void require_sign_vector(const CurveGraph& g, const SignVector& s) {
  if (s.size() != static_cast<std::size_t>(g.edge_count()))
    throw ValidationError("sign vector: expected one entry per edge (" +
                          std::to_string(g.edge_count()) + "), got " + std::to_string(s.size()));
  for (signed char v : s) {
    if (v < -1 || v > 1) throw ValidationError("sign vector entries must be -1, 0 or 1");
  }
}

// Mask of the edges lying on a directed cycle of the partial orientation
// the nonzero signs induce. Reachability by transitive closure; the graphs
// here are far below the size where that matters.
std::uint64_t directed_cycle_edges(const CurveGraph& g, const SignVector& s) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) reach[v][v] = 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (s[e] == 0 || g.edge(e).is_loop()) continue;
    const int tail = s[e] > 0 ? g.edge(e).first : g.edge(e).second;
    reach[tail][g.edge(e).other(tail)] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = 1;
      }
    }
  }
  std::uint64_t mask = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (s[e] == 0) continue;
    if (g.edge(e).is_loop()) {
      mask |= std::uint64_t{1} << e;
      continue;
    }
    const int tail = s[e] > 0 ? g.edge(e).first : g.edge(e).second;
    if (reach[g.edge(e).other(tail)][tail]) mask |= std::uint64_t{1} << e;
  }
  return mask;
}

// The cell in a reduced coordinate system: the zero-sign equalities are
// eliminated, leaving a full-dimensional parametrization z -> z * coords
// of the ambient subspace the cell spans candidates in.
struct ReducedCell {
  linalg::RatMatrix coords;      // k x E, columns of zero-sign edges vanish
  std::vector<int> free_edges;   // edges with nonzero sign, ascending
  int k = 0;
  std::size_t edge_count = 0;
};

ReducedCell reduce_cell(const CycleLattice& lattice, const SignVector& s) {
  const CurveGraph& g = *lattice.graph;
  const int h = lattice.rank();
  const int m = g.edge_count();

  linalg::RatMatrix zero_rows;
  ReducedCell red;
  red.edge_count = static_cast<std::size_t>(m);
  for (int e = 0; e < m; ++e) {
    if (s[e] != 0) {
      red.free_edges.push_back(e);
      continue;
    }
    linalg::RatVector row(h);
    for (int r = 0; r < h; ++r) row[r] = lattice.basis[r][e];
    zero_rows.push_back(std::move(row));
  }

  linalg::RatMatrix kernel;
  if (zero_rows.empty()) {
    kernel.assign(h, linalg::RatVector(h, 0));
    for (int i = 0; i < h; ++i) kernel[i][i] = 1;
  } else {
    kernel = linalg::nullspace(zero_rows);
  }
  red.k = static_cast<int>(kernel.size());

  red.coords.assign(red.k, linalg::RatVector(m, 0));
  for (int i = 0; i < red.k; ++i) {
    for (int e = 0; e < m; ++e) {
      Rational x = 0;
      for (int r = 0; r < h; ++r) x += kernel[i][r] * lattice.basis[r][e];
      red.coords[i][e] = std::move(x);
    }
  }
  return red;
}

// Vertices of the reduced cell, in edge coordinates. A vertex is a
// feasible point where k independent bounds are active, so we scan the
// k-subsets of the 2k' bounds. When max_rank_stop is set, enumeration
// stops as soon as the affine rank of the collected vertices reaches k
// (enough for the dimension, useless for the full vertex list).
std::vector<linalg::RatVector> reduced_vertices(const ReducedCell& red, const SignVector& s,
                                                bool max_rank_stop) {
  const int k = red.k;
  if (k == 0) {
    // The parametrization is a single point, the origin.
    return {linalg::RatVector(red.edge_count, 0)};
  }
  const std::size_t m = red.edge_count;

  // Bounds, each as (edge, rhs): the hyperplane x_e = rhs. Sign +1 gives
  // rhs 0 and 1, sign -1 gives rhs -1 and 0.
  std::vector<std::pair<int, int>> bounds;
  for (int e : red.free_edges) {
    if (s[e] > 0) {
      bounds.push_back({e, 0});
      bounds.push_back({e, 1});
    } else {
      bounds.push_back({e, -1});
      bounds.push_back({e, 0});
    }
  }
  const int nb = static_cast<int>(bounds.size());
  if (nb < k) return {};  // cannot happen: k <= number of free edges

  const auto feasible = [&](const linalg::RatVector& x) {
    for (int e : red.free_edges) {
      if (s[e] > 0) {
        if (x[e] < 0 || x[e] > 1) return false;
      } else {
        if (x[e] < -1 || x[e] > 0) return false;
      }
    }
    return true;
  };

  std::set<linalg::RatVector> points;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    linalg::RatMatrix a(k, linalg::RatVector(k));
    linalg::RatVector b(k);
    for (int i = 0; i < k; ++i) {
      const auto [e, rhs] = bounds[pick[i]];
      for (int j = 0; j < k; ++j) a[i][j] = red.coords[j][e];
      b[i] = rhs;
    }
    if (const auto z = linalg::solve_square(std::move(a), std::move(b))) {
      linalg::RatVector x(m, 0);
      for (std::size_t e = 0; e < m; ++e) {
        Rational acc = 0;
        for (int j = 0; j < k; ++j) acc += (*z)[j] * red.coords[j][e];
        x[e] = std::move(acc);
      }
      if (feasible(x)) {
        points.insert(std::move(x));
        if (max_rank_stop) {
          const std::vector<linalg::RatVector> so_far(points.begin(), points.end());
          if (linalg::affine_rank(so_far) == k) break;
        }
      }
    }
    // Next k-subset in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[i] == nb - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {points.begin(), points.end()};
}

struct IndexedCell {
  std::uint64_t index = 0;
  DelaunayCell cell;
};

// Lattice membership of a translation vector: integral entries that are an
// integer combination of the basis rows. The combination is unique because
// the rows are independent, so integrality of the solved coefficients is
// the whole test.
bool is_lattice_vector(const CycleLattice& lattice, const linalg::RatVector& t) {
  const int h = lattice.rank();
  const std::size_t m = t.size();
  for (const Rational& x : t) {
    if (boost::multiprecision::denominator(x) != 1) return false;
  }
  if (h == 0) {
    for (const Rational& x : t) {
      if (x != 0) return false;
    }
    return true;
  }
  linalg::RatMatrix bt(m, linalg::RatVector(h));
  for (std::size_t e = 0; e < m; ++e) {
    for (int r = 0; r < h; ++r) bt[e][r] = lattice.basis[r][e];
  }
  const auto z = linalg::solve_general(std::move(bt), t);
  if (!z) return false;
  for (const Rational& c : *z) {
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

bool translate_equivalent(const CycleLattice& lattice, const DelaunayCell& a,
                          const DelaunayCell& b) {
  if (a.dim != b.dim || a.vertices.size() != b.vertices.size()) return false;
  if (a.vertices.empty()) return false;
  const std::size_t m = a.vertices[0].size();
  const auto count = static_cast<long long>(a.vertices.size());
  linalg::RatVector t(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    Rational diff = 0;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
      diff += b.vertices[i][e] - a.vertices[i][e];
    t[e] = diff / count;
  }
  if (!is_lattice_vector(lattice, t)) return false;
  std::vector<linalg::RatVector> shifted = a.vertices;
  for (auto& v : shifted) {
    for (std::size_t e = 0; e < m; ++e) v[e] += t[e];
  }
  std::sort(shifted.begin(), shifted.end());
  return shifted == b.vertices;
}

void require_cell_cap(const CurveGraph& g, int max_edges) {
  const int hard_cap = std::min(max_edges, 32);
  if (g.edge_count() > hard_cap)
    throw CapExceededError("cell enumeration: " + std::to_string(g.edge_count()) +
                           " edges exceeds cap " + std::to_string(hard_cap));
}

CellEnumeration dedupe_and_sort(const CycleLattice& lattice, std::vector<IndexedCell> cells) {
  // Ascending sign index, so the class representative is always the cell
  // with the smallest index regardless of how the list was produced.
  std::sort(cells.begin(), cells.end(),
            [](const IndexedCell& a, const IndexedCell& b) { return a.index < b.index; });
  std::vector<IndexedCell> reps;
  for (auto& c : cells) {
    bool fresh = true;
    for (const auto& r : reps) {
      if (translate_equivalent(lattice, r.cell, c.cell)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(std::move(c));
  }
  std::sort(reps.begin(), reps.end(), [](const IndexedCell& a, const IndexedCell& b) {
    if (a.cell.dim != b.cell.dim) return a.cell.dim > b.cell.dim;
    return a.index < b.index;
  });
  CellEnumeration out;
  for (auto& r : reps) {
    ++out.by_dim[r.cell.dim];
    out.representatives.push_back(std::move(r.cell));
  }
  return out;
}

std::uint64_t pow3(int e) {
  std::uint64_t p = 1;
  while (e-- > 0) p *= 3;
  return p;
}

}  // namespace

SignVector sign_from_index(std::uint64_t index, int edge_count) {
  SignVector s(edge_count, 0);
  for (int e = 0; e < edge_count; ++e) {
    const auto digit = index % 3;
    index /= 3;
    s[e] = digit == 0 ? 0 : (digit == 1 ? 1 : -1);
  }
  if (index != 0) throw ValidationError("sign index out of range for the edge count");
  return s;
}

std::uint64_t sign_index(const SignVector& s) {
  std::uint64_t index = 0;
  for (std::size_t e = s.size(); e-- > 0;) {
    const int digit = s[e] == 0 ? 0 : (s[e] > 0 ? 1 : 2);
    index = index * 3 + digit;
  }
  return index;
}

SignVector canonical_sign(const CurveGraph& g, const SignVector& s) {
  require_sign_vector(g, s);
  const std::uint64_t keep = directed_cycle_edges(g, s);
  SignVector out = s;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!((keep >> e) & 1u)) out[e] = 0;
  }
  return out;
}

int combinatorial_dimension(const CurveGraph& g, const SignVector& s) {
  require_sign_vector(g, s);
  const std::uint64_t mask = directed_cycle_edges(g, s);
  return static_cast<int>(cyclomatic_number(GeneratingSubgraph::of_mask(g, mask)));
}

int exact_cell_dimension(const CycleLattice& lattice, const SignVector& s) {
  require_sign_vector(*lattice.graph, s);
  const ReducedCell red = reduce_cell(lattice, s);
  const auto verts = reduced_vertices(red, s, /*max_rank_stop=*/true);
  return linalg::affine_rank(verts);
}

DelaunayCell cell_from_sign(const CycleLattice& lattice, const SignVector& s) {
  require_sign_vector(*lattice.graph, s);
  DelaunayCell cell;
  cell.sign = s;
  const ReducedCell red = reduce_cell(lattice, s);
  cell.vertices = reduced_vertices(red, s, /*max_rank_stop=*/false);
  std::sort(cell.vertices.begin(), cell.vertices.end());
  cell.dim = combinatorial_dimension(*lattice.graph, s);
  if (linalg::affine_rank(cell.vertices) != cell.dim)
    throw InvariantError("cell dimension mismatch between the combinatorial and exact routes");
  return cell;
}

SignVector orientation_sign(const GeneratingSubgraph& sub, const Orientation& o) {
  const CurveGraph& g = *sub.graph;
  SignVector s(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!sub.keeps(e)) continue;
    s[e] = ((o.backward >> e) & 1u) ? -1 : 1;
  }
  return s;
}

DelaunayCell orientation_to_cell(const CycleLattice& lattice, const GeneratingSubgraph& sub,
                                 const Orientation& o) {
  return cell_from_sign(lattice, orientation_sign(sub, o));
}

CellEnumeration enumerate_cells_serial(const CycleLattice& lattice, const CellOptions& opt) {
  const CurveGraph& g = *lattice.graph;
  require_cell_cap(g, opt.max_edges);
  const std::uint64_t total = pow3(g.edge_count());
  std::vector<IndexedCell> cells;
  for (std::uint64_t index = 0; index < total; ++index) {
    const SignVector s = sign_from_index(index, g.edge_count());
    if (canonical_sign(g, s) != s) continue;
    cells.push_back({index, cell_from_sign(lattice, s)});
  }
  return dedupe_and_sort(lattice, std::move(cells));
}

CellEnumeration enumerate_cells(const CycleLattice& lattice, const CellOptions& opt) {
#ifndef _OPENMP
  return enumerate_cells_serial(lattice, opt);
#else
  const CurveGraph& g = *lattice.graph;
  require_cell_cap(g, opt.max_edges);
  const long long total = static_cast<long long>(pow3(g.edge_count()));
  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();

  std::vector<IndexedCell> cells;
#pragma omp parallel num_threads(threads)
  {
    std::vector<IndexedCell> local;
#pragma omp for schedule(dynamic, 32) nowait
    for (long long index = 0; index < total; ++index) {
      const SignVector s = sign_from_index(static_cast<std::uint64_t>(index), g.edge_count());
      if (canonical_sign(g, s) != s) continue;
      local.push_back({static_cast<std::uint64_t>(index), cell_from_sign(lattice, s)});
    }
#pragma omp critical(jacstrat_cells_merge)
    cells.insert(cells.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  }
  // dedupe_and_sort re-sorts by index first, so the merge order here does
  // not leak into the result.
  return dedupe_and_sort(lattice, std::move(cells));
#endif
}

CompareReport compare_with_strata(const CurveGraph& g, int max_edges_strata, int max_edges_cells,
                                  int jobs) {
  CompareReport report;
  StrataOptions sopt;
  sopt.max_edges = max_edges_strata;
  sopt.jobs = jobs;
  report.strata_by_codim = enumerate_strata(g, sopt).by_codim;

  const CycleLattice lattice = build_lattice(g);
  CellOptions copt;
  copt.max_edges = max_edges_cells;
  copt.jobs = jobs;
  const CellEnumeration cells = enumerate_cells(lattice, copt);
  const int h = lattice.rank();
  for (const auto& [dim, count] : cells.by_dim) report.cells_by_codim[h - dim] = count;

  report.match = report.strata_by_codim == report.cells_by_codim;
  return report;
}

}  // namespace jacstrat
