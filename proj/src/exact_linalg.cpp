#include "jacstrat/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace jacstrat::linalg {

namespace {

// Reduced row echelon form in place. Returns the pivot column of each
// pivot row, in order.
std::vector<int> rref(RatMatrix& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    const Rational inv = a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RatMatrix a) { return static_cast<int>(rref(a).size()); }

int affine_rank(const std::vector<RatVector>& points) {
  if (points.size() <= 1) return 0;
  RatMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector row(points[i]);
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= points[0][j];
    diffs.push_back(std::move(row));
  }
  return rank(std::move(diffs));
}

std::vector<RatVector> nullspace(const RatMatrix& a) {
  if (a.empty()) return {};
  const int cols = static_cast<int>(a[0].size());
  RatMatrix work = a;
  const std::vector<int> pivots = rref(work);

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -work[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_square(RatMatrix a, RatVector b) {
  const int n = static_cast<int>(a.size());
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) return std::nullopt;
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  RatVector x(n, Rational(0));
  for (int i = n - 1; i >= 0; --i) {
    Rational acc = b[i];
    for (int j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

std::optional<RatVector> solve_general(RatMatrix a, RatVector b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  const std::vector<int> pivots = rref(a);
  // Inconsistent iff a pivot landed in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVector x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

BigInt determinant(IntMatrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;  // exact by Bareiss
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<BigInt> smith_invariant_factors(IntMatrix a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  const int steps = std::min(rows, cols);
  std::vector<BigInt> factors(steps, BigInt(0));

  for (int t = 0; t < steps; ++t) {
    // Pick the nonzero entry of smallest magnitude as pivot.
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        const BigInt mag = abs(a[i][j]);
        if (pi < 0 || mag < best) {
          pi = i;
          pj = j;
          best = mag;
        }
      }
    }
    if (pi < 0) break;  // all remaining entries vanish
    std::swap(a[t], a[pi]);
    for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Clear column t.
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);  // strictly smaller remainder becomes pivot
          dirty = true;
        }
      }
      // Clear row t.
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot must divide everything below and to the right; if not,
      // fold the offending row in and start over.
      for (int i = t + 1; i < rows && !dirty; ++i) {
        for (int j = t + 1; j < cols && !dirty; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (int c = t; c < cols; ++c) a[t][c] += a[i][c];
            dirty = true;
          }
        }
      }
    }
    factors[t] = abs(a[t][t]);
  }
  return factors;
}

}  // namespace jacstrat::linalg
