#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "jacstrat/lattice.hpp"
#include "jacstrat/stability.hpp"

namespace jacstrat {

// Sign per edge: +1 for bounds [0,1], -1 for [-1,0], 0 for the point {0}.
// A sign vector cuts a Delaunay cell out of the cycle space: all cycle-
// space points whose edge coordinates respect the bounds.
using SignVector = std::vector<signed char>;

/// Decode index -> sign vector; digit j of the base-3 index is edge j
/// (0 -> zero, 1 -> plus, 2 -> minus).
SignVector sign_from_index(std::uint64_t index, int edge_count);
std::uint64_t sign_index(const SignVector& s);

/// Zero out the signs of edges that lie on no directed cycle of the
/// partial orientation the nonzero signs induce. The cell is unchanged:
/// circulations cannot use such edges.
SignVector canonical_sign(const CurveGraph& g, const SignVector& s);

/// Dimension of the cell, computed combinatorially: the cyclomatic number
/// of the subgraph of edges lying on at least one directed cycle of the
/// induced partial orientation (a loop with nonzero sign always does).
int combinatorial_dimension(const CurveGraph& g, const SignVector& s);

/// Dimension of the cell via exact rational polytope geometry. Same value
/// as combinatorial_dimension; kept as the independent slow route.
int exact_cell_dimension(const CycleLattice& lattice, const SignVector& s);

struct DelaunayCell {
  SignVector sign;
  std::vector<std::vector<Rational>> vertices;  // lex-sorted points in edge coordinates
  int dim = 0;
};

/// Full cell: exact vertex enumeration plus the combinatorial dimension,
/// with agreement between the two asserted. Every cell contains the
/// origin and sits inside [-1,1]^E.
DelaunayCell cell_from_sign(const CycleLattice& lattice, const SignVector& s);

/// Sign vector of an orientation: kept edge oriented along its reference
/// direction -> +1, against it -> -1 (loops count as along), deleted edge
/// -> 0. The orientation is componentwise stable exactly when every kept
/// edge lies on a directed cycle, i.e. when the cell's dimension is
/// h(subgraph) with no kept edge zeroed by canonicalization.
SignVector orientation_sign(const GeneratingSubgraph& sub, const Orientation& o);
DelaunayCell orientation_to_cell(const CycleLattice& lattice, const GeneratingSubgraph& sub,
                                 const Orientation& o);

struct CellOptions {
  int max_edges = 7;  // 3^E sign vectors with exact geometry per survivor
  int jobs = 0;
};

struct CellEnumeration {
  // One representative per translation class, sorted by descending
  // dimension then ascending sign index.
  std::vector<DelaunayCell> representatives;
  std::map<int, long long> by_dim;  // dim -> class count
};

/// Enumerate Delaunay cells modulo lattice translation: scan all 3^E sign
/// vectors, keep the canonical ones, build cells, then identify two cells
/// when the difference of their vertex barycenters is a lattice vector
/// mapping one vertex set onto the other. Representatives are drawn from
/// the unit sign box; that this catches every translation class is
/// validated by compare_with_strata.
CellEnumeration enumerate_cells(const CycleLattice& lattice, const CellOptions& opt = {});

/// Serial reference implementation, kept for testing and benchmarks.
CellEnumeration enumerate_cells_serial(const CycleLattice& lattice, const CellOptions& opt = {});

struct CompareReport {
  std::map<int, long long> strata_by_codim;
  std::map<int, long long> cells_by_codim;  // codim = h(G) - dim
  bool match = false;
};

/// Run the stratification and the cell enumeration independently and
/// compare their per-codimension counts.
CompareReport compare_with_strata(const CurveGraph& g, int max_edges_strata = 16,
                                  int max_edges_cells = 7, int jobs = 0);

}  // namespace jacstrat
