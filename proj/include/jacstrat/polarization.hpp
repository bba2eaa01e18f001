#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jacstrat/rational.hpp"
#include "jacstrat/stability.hpp"

namespace jacstrat {

/// Polarization weights, one positive integer per vertex.
struct Polarization {
  std::vector<long long> lambda;

  long long total() const;
};

/// A rank-1 torsion-free sheaf in combinatorial form: invertible on the
/// partial normalization given by `subgraph`, with multidegree `dprime`
/// there; each deleted edge is a node where the stalk is not locally free.
struct SheafModel {
  std::uint64_t subgraph = 0;
  std::vector<long long> dprime;
};

struct SheafDegree {
  long long chi = 0;     // Euler characteristic
  long long degree = 0;  // chi - chi(O) = chi + g - 1
};

/// chi(F) = sum(d'_i + 1 - genus_i) - (kept edges); degree = chi + g - 1.
/// The degree on the partial normalization differs by the number of
/// deleted edges, which is checked internally.
SheafDegree sheaf_degree(const SheafModel& f, const CurveGraph& g);

/// Euler characteristic of the maximal subsheaf supported on the proper
/// nonempty subcurve D: e'_D - internal(D) - crossing(D), edges counted in
/// the sheaf's subgraph.
long long subsheaf_chi(const SheafModel& f, const CurveGraph& g, const VertexSet& d);

/// Slope (semi)stability with respect to the polarization: compare
/// chi(F_D)/lambda_D against chi(F)/lambda_total for every proper
/// nonempty D, cross-multiplied so everything stays in integers.
Classification is_semistable_L(const SheafModel& f, const Polarization& pol, const CurveGraph& g,
                               int max_vertices = kDefaultVertexCap);

/// The translation parameter phi, defined modulo integer vector shifts:
/// phi_i = (lambda_i/lambda)(d - omega/2) - d_i + omega_i/2 - n_i.
struct PhiVector {
  std::vector<Rational> phi;        // the representative computed from the inputs
  std::vector<Rational> canonical;  // entrywise reduced mod 1 into [0, 1)
};

struct PhiInputs {
  std::vector<long long> lambda;                  // positive weights
  std::vector<long long> omega;                   // must sum to 2g - 2
  long long degree = 0;                           // total degree d
  std::optional<std::vector<long long>> d_split;  // default: proportional split of d
  std::optional<std::vector<long long>> twist;    // the integers n_i, default 0
};

PhiVector compute_phi(const PhiInputs& in, const CurveGraph& g);

/// Multidegree of the dualizing sheaf: 2 genus_i - 2 + 2 loops_i +
/// (non-loop incidences). Sums to 2g - 2; the natural omega default.
std::vector<long long> dualizing_multidegree(const CurveGraph& g);

/// Greedy split of d proportionally to lambda: floor(d * lambda_i /
/// lambda), remainder distributed one each to the lowest-index vertices.
std::vector<long long> default_degree_split(long long degree, const Polarization& pol);

}  // namespace jacstrat
