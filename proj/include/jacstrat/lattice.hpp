#pragma once

#include <vector>

#include "jacstrat/curve_graph.hpp"
#include "jacstrat/rational.hpp"

namespace jacstrat {

/// First homology of the graph inside the edge lattice. Row r of `basis`
/// is the fundamental cycle of the r-th non-forest edge (loops included)
/// with respect to a fixed spanning forest, written in edge coordinates
/// under the reference orientation first -> second. Entries are -1/0/+1;
/// a loop's row is a single +1. `gram` is basis * basis^T, the standard
/// inner product restricted to the cycle space.
struct CycleLattice {
  const CurveGraph* graph = nullptr;
  std::vector<int> forest_edges;             // ascending edge ids
  std::vector<int> cycle_edges;              // ascending; one basis row each
  std::vector<std::vector<int>> basis;       // h x E
  std::vector<std::vector<long long>> gram;  // h x h, symmetric positive definite

  int rank() const { return static_cast<int>(basis.size()); }
};

/// Deterministic construction: spanning forest greedily in edge-id order,
/// fundamental cycles in non-forest edge-id order.
CycleLattice build_lattice(const CurveGraph& g);

/// Whether the basis spans a saturated sublattice of the edge lattice
/// (every integer vector in its rational span is an integer combination).
/// Checked via Smith invariant factors; expected to be true always.
bool saturation_check(const CycleLattice& lattice);

/// det(gram), computed exactly. Equals the number of spanning forests
/// obtained by picking one spanning tree per component.
BigInt gram_determinant(const CycleLattice& lattice);

}  // namespace jacstrat
