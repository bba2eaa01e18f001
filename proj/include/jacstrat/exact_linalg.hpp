#pragma once

#include <optional>
#include <vector>

#include "jacstrat/rational.hpp"

// Small dense exact linear algebra over arbitrary-precision rationals and
// integers. Everything here is written for desk-scale matrices (dimensions
// in the tens); no pivot-size tricks beyond what exactness requires.

namespace jacstrat::linalg {

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<std::vector<BigInt>>;

// Row rank of a (works on a copy).
int rank(RatMatrix a);

// Rank of the affine hull of a point set, i.e. rank of {p - points[0]}.
int affine_rank(const std::vector<RatVector>& points);

// Basis of the kernel {x : a x = 0}, returned as rows. a is m x n, the
// result vectors have length n.
std::vector<RatVector> nullspace(const RatMatrix& a);

// Unique solution of a square system, or nullopt when a is singular.
std::optional<RatVector> solve_square(RatMatrix a, RatVector b);

// Any solution of a (possibly non-square) consistent system, or nullopt
// when the system is inconsistent. Free variables are set to zero.
std::optional<RatVector> solve_general(RatMatrix a, RatVector b);

// Determinant by fraction-free (Bareiss) elimination. det of the empty
// matrix is 1.
BigInt determinant(IntMatrix a);

// Invariant factors d_1 | d_2 | ... of the Smith normal form, all
// nonnegative, length min(rows, cols). Trailing entries may be zero.
std::vector<BigInt> smith_invariant_factors(IntMatrix a);

}  // namespace jacstrat::linalg
