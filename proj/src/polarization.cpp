#include "jacstrat/polarization.hpp"

namespace jacstrat {

namespace {

void require_per_vertex(std::size_t got, const CurveGraph& g, const char* what) {
  if (got != static_cast<std::size_t>(g.vertex_count()))
    throw ValidationError(std::string(what) + ": expected one entry per vertex (" +
                          std::to_string(g.vertex_count()) + "), got " + std::to_string(got));
}

void require_positive_lambda(const std::vector<long long>& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0)
      throw ValidationError("lambda[" + std::to_string(i) + "] must be positive, got " +
                            std::to_string(lambda[i]));
  }
}

}  // namespace

long long Polarization::total() const {
  long long sum = 0;
  for (long long x : lambda) sum += x;
  return sum;
}

SheafDegree sheaf_degree(const SheafModel& f, const CurveGraph& g) {
  require_per_vertex(f.dprime.size(), g, "sheaf multidegree");
  const auto sub = GeneratingSubgraph::of_mask(g, f.subgraph);
  SheafDegree out;
  for (int i = 0; i < g.vertex_count(); ++i) out.chi += f.dprime[i] + 1 - g.vertex(i).genus;
  out.chi -= sub.edge_count();
  out.degree = out.chi + arithmetic_genus(g) - 1;
  // Consistency with the partial normalization: its genus drops by one per
  // deleted edge, and so does the degree of the same chi.
  const long long deleted = g.edge_count() - sub.edge_count();
  if (out.degree - deleted != out.chi + arithmetic_genus(sub) - 1)
    throw InvariantError("sheaf degree bookkeeping disagrees across the normalization");
  return out;
}

long long subsheaf_chi(const SheafModel& f, const CurveGraph& g, const VertexSet& d) {
  require_per_vertex(f.dprime.size(), g, "sheaf multidegree");
  if (d.empty()) throw ValidationError("subcurve must be nonempty");
  const auto sub = GeneratingSubgraph::of_mask(g, f.subgraph);
  const auto stats = subcurve_stats(sub, d);
  long long chi = 0;
  for (int i : d.indices()) chi += f.dprime[i] + 1 - g.vertex(i).genus;
  return chi - stats.internal_edges - stats.crossing_edges;
}

Classification is_semistable_L(const SheafModel& f, const Polarization& pol, const CurveGraph& g,
                               int max_vertices) {
  require_per_vertex(f.dprime.size(), g, "sheaf multidegree");
  require_per_vertex(pol.lambda.size(), g, "lambda");
  require_positive_lambda(pol.lambda);
  if (g.vertex_count() > max_vertices)
    throw CapExceededError("slope stability: " + std::to_string(g.vertex_count()) +
                           " vertices exceeds cap " + std::to_string(max_vertices));

  const long long chi_total = sheaf_degree(f, g).chi;
  const long long lambda_total = pol.total();

  const int n = g.vertex_count();
  if (n <= 1) return {};
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::optional<std::uint64_t> equality;
  for (std::uint64_t mask = 1; mask < all; ++mask) {
    const VertexSet d{mask};
    long long lambda_d = 0;
    for (int i : d.indices()) lambda_d += pol.lambda[i];
    // chi_D / lambda_D <= chi / lambda, cross-multiplied; both lambdas
    // are positive so the direction survives.
    const long long lhs = subsheaf_chi(f, g, d) * lambda_total;
    const long long rhs = chi_total * lambda_d;
    if (lhs > rhs) return {Verdict::Unstable, mask};
    if (lhs == rhs && !equality) equality = mask;
  }
  if (equality) return {Verdict::StrictlySemistable, equality};
  return {};
}

PhiVector compute_phi(const PhiInputs& in, const CurveGraph& g) {
  require_per_vertex(in.lambda.size(), g, "lambda");
  require_positive_lambda(in.lambda);
  require_per_vertex(in.omega.size(), g, "omega");
  const long long genus = arithmetic_genus(g);
  long long omega_sum = 0;
  for (long long w : in.omega) omega_sum += w;
  if (omega_sum != 2 * genus - 2)
    throw ValidationError("omega sums to " + std::to_string(omega_sum) + ", expected 2g-2 = " +
                          std::to_string(2 * genus - 2));

  std::vector<long long> split;
  if (in.d_split) {
    require_per_vertex(in.d_split->size(), g, "degree split");
    long long sum = 0;
    for (long long x : *in.d_split) sum += x;
    if (sum != in.degree)
      throw SumMismatchError("degree split sums to " + std::to_string(sum) + ", expected " +
                             std::to_string(in.degree));
    split = *in.d_split;
  } else {
    Polarization pol{in.lambda};
    split = default_degree_split(in.degree, pol);
  }

  std::vector<long long> twist(g.vertex_count(), 0);
  if (in.twist) {
    require_per_vertex(in.twist->size(), g, "twist");
    twist = *in.twist;
  }

  long long lambda_total = 0;
  for (long long x : in.lambda) lambda_total += x;

  PhiVector out;
  out.phi.resize(g.vertex_count());
  out.canonical.resize(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    Rational phi = Rational(in.lambda[i]) * (2 * in.degree - omega_sum) / (2 * lambda_total);
    phi += Rational(in.omega[i]) / 2;
    phi -= split[i];
    phi -= twist[i];
    out.phi[i] = phi;
    out.canonical[i] = fractional_part(phi);
  }
  return out;
}

std::vector<long long> dualizing_multidegree(const CurveGraph& g) {
  std::vector<long long> omega(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    omega[i] = 2 * g.vertex(i).genus - 2 + g.loop_counts()[i] + g.incidence_counts()[i];
  }
  return omega;
}

std::vector<long long> default_degree_split(long long degree, const Polarization& pol) {
  require_positive_lambda(pol.lambda);
  if (pol.lambda.empty()) throw ValidationError("lambda must be nonempty");
  const long long lambda_total = pol.total();
  std::vector<long long> split(pol.lambda.size());
  long long assigned = 0;
  for (std::size_t i = 0; i < pol.lambda.size(); ++i) {
    split[i] =
        static_cast<long long>(rational_floor(Rational(degree) * pol.lambda[i] / lambda_total));
    assigned += split[i];
  }
  for (std::size_t i = 0; assigned < degree; ++i, ++assigned) ++split[i];
  return split;
}

}  // namespace jacstrat
