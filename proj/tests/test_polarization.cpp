#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "jacstrat/examples_suite.hpp"
#include "jacstrat/polarization.hpp"
#include "support/test_graphs.hpp"

using namespace jacstrat;

namespace {

Rational phi_sum(const PhiVector& p) {
  Rational s = 0;
  for (const auto& x : p.phi) s += x;
  return s;
}

}  // namespace

TEST_CASE("sheaf degree bookkeeping") {
  const auto g = example_dollar_sign();

  // Line bundle on the whole curve: degree is just the multidegree sum.
  SheafModel full{0b111, {3, -1}};
  const auto sd = sheaf_degree(full, g);
  CHECK(sd.degree == 2);
  CHECK(sd.chi == sd.degree - 1);  // g = 2

  // Deleting an edge drops chi by the lost node.
  SheafModel partial{0b011, {1, 0}};
  const auto sp = sheaf_degree(partial, g);
  CHECK(sp.chi == 1 + 0 + 2 - 2);
  CHECK(sp.degree == sp.chi + 1);

  CHECK_THROWS_AS(sheaf_degree(SheafModel{0b111, {1}}, g), ValidationError);
}

TEST_CASE("subsheaf chi counts internal and crossing edges of the kept subgraph") {
  const auto g = example_dollar_sign();
  SheafModel f{0b011, {2, 0}};  // keep two of the three edges
  const auto a = VertexSet::of_ids(g, {"a"});
  const auto b = VertexSet::of_ids(g, {"b"});
  // e'_a = 2 - (0 - 1) = 3, crossing = 2 kept edges.
  CHECK(subsheaf_chi(f, g, a) == 3 - 2);
  CHECK(subsheaf_chi(f, g, b) == 1 - 2);
}

TEST_CASE("slope stability can flip with the polarization") {
  const auto g = example_two_components();
  SheafModel f{0b1, {2, 2}};
  CHECK(sheaf_degree(f, g).chi == 2);

  CHECK(is_semistable_L(f, Polarization{{2, 1}}, g).verdict == Verdict::Stable);
  CHECK(is_semistable_L(f, Polarization{{1, 2}}, g).verdict == Verdict::Unstable);
  CHECK(is_semistable_L(f, Polarization{{1, 1}}, g).verdict == Verdict::StrictlySemistable);

  // The unstable witness is the component where the subsheaf slope
  // exceeds the total slope.
  const auto bad = is_semistable_L(f, Polarization{{1, 2}}, g);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == 0b01);

  CHECK_THROWS_AS(is_semistable_L(f, Polarization{{0, 1}}, g), ValidationError);
  CHECK_THROWS_AS(is_semistable_L(f, Polarization{{1}}, g), ValidationError);
}

TEST_CASE("at chi zero the slope test reduces to the multidegree inequalities") {
  const std::vector<Polarization> pols = {{{1, 1, 1}}, {{3, 1, 2}}, {{5, 7, 1}}};
  for (const auto& g : testsupport::connected_corpus(3, 4)) {
    for_each_generating_subgraph(g, [&](const GeneratingSubgraph& sub) {
      for (const auto& e : testsupport::indegree_box(sub)) {
        std::vector<long long> dprime(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
          dprime[i] = e[i] + g.vertex(static_cast<int>(i)).genus - 1;
        }
        const SheafModel f{sub.kept, dprime};
        CHECK(sheaf_degree(f, g).chi == 0);
        const auto reference = check_edges({e}, sub);
        for (const auto& full_pol : pols) {
          Polarization pol{{full_pol.lambda.begin(),
                            full_pol.lambda.begin() + g.vertex_count()}};
          const auto got = is_semistable_L(f, pol, g);
          CHECK(got.verdict == reference.verdict);
          CHECK(got.witness == reference.witness);
        }
      }
    });
  }
}

TEST_CASE("phi on the dollar sign at degree g-1") {
  const auto g = example_dollar_sign();
  PhiInputs in;
  in.lambda = {1, 1};
  in.omega = dualizing_multidegree(g);
  in.degree = 1;
  const auto p = compute_phi(in, g);
  CHECK(p.phi[0] == Rational(-1, 2));
  CHECK(p.phi[1] == Rational(1, 2));
  CHECK(p.canonical[0] == Rational(1, 2));
  CHECK(p.canonical[1] == Rational(1, 2));
  CHECK(phi_sum(p) == 0);
}

TEST_CASE("phi with uneven weights") {
  const auto g = example_two_components();
  PhiInputs in;
  in.lambda = {2, 3};
  in.omega = dualizing_multidegree(g);
  in.degree = 4;
  const auto p = compute_phi(in, g);
  CHECK(p.phi[0] == Rational(-7, 10));
  CHECK(p.phi[1] == Rational(7, 10));
  CHECK(p.canonical[0] == Rational(3, 10));
  CHECK(p.canonical[1] == Rational(7, 10));
}

TEST_CASE("phi sum is minus the twist sum") {
  const auto g = example_dollar_sign();
  PhiInputs in;
  in.lambda = {3, 2};
  in.omega = dualizing_multidegree(g);
  in.degree = 5;
  in.twist = std::vector<long long>{2, -1};
  const auto p = compute_phi(in, g);
  CHECK(phi_sum(p) == -1);

  in.twist = std::vector<long long>{0, 0};
  CHECK(phi_sum(compute_phi(in, g)) == 0);
}

TEST_CASE("canonical phi at degree g-1 does not depend on the weights") {
  for (const auto& g : testsupport::connected_corpus(3, 4)) {
    const long long gm1 = arithmetic_genus(g) - 1;
    PhiInputs a;
    a.lambda = std::vector<long long>(g.vertex_count(), 1);
    a.omega = dualizing_multidegree(g);
    a.degree = gm1;
    PhiInputs b = a;
    for (int i = 0; i < g.vertex_count(); ++i) b.lambda[i] = 1 + (i * 7 + 3) % 5;
    const auto pa = compute_phi(a, g);
    const auto pb = compute_phi(b, g);
    CHECK(pa.canonical == pb.canonical);
  }
}

TEST_CASE("canonical phi ignores integer changes to the degree split") {
  const auto g = example_dollar_sign();
  PhiInputs a;
  a.lambda = {2, 5};
  a.omega = dualizing_multidegree(g);
  a.degree = 3;
  a.d_split = std::vector<long long>{1, 2};
  PhiInputs b = a;
  b.d_split = std::vector<long long>{4, -1};
  const auto pa = compute_phi(a, g);
  const auto pb = compute_phi(b, g);
  CHECK(pa.canonical == pb.canonical);
  CHECK(pa.phi != pb.phi);

  // A split with the wrong sum is rejected.
  PhiInputs bad = a;
  bad.d_split = std::vector<long long>{1, 1};
  CHECK_THROWS_AS(compute_phi(bad, g), SumMismatchError);
}

TEST_CASE("omega must sum to 2g - 2") {
  const auto g = example_dollar_sign();
  PhiInputs in;
  in.lambda = {1, 1};
  in.omega = {1, 0};
  in.degree = 1;
  CHECK_THROWS_AS(compute_phi(in, g), ValidationError);
}

TEST_CASE("dualizing multidegree sums to 2g - 2 and counts nodes correctly") {
  for (const auto& g : testsupport::connected_corpus(4, 4)) {
    const auto w = dualizing_multidegree(g);
    const long long total = std::accumulate(w.begin(), w.end(), 0LL);
    CHECK(total == 2 * arithmetic_genus(g) - 2);
  }
  // One genus-1 vertex with a loop: 2*1 - 2 + 2*1 + 0 = 2.
  CHECK(dualizing_multidegree(example_irreducible_one_node()) ==
        std::vector<long long>{2});
  // Dollar sign: 2*0 - 2 + 0 + 3 = 1 on each vertex.
  CHECK(dualizing_multidegree(example_dollar_sign()) == std::vector<long long>{1, 1});
}

TEST_CASE("default degree split is proportional with remainder to low indices") {
  CHECK(default_degree_split(4, Polarization{{2, 3}}) == std::vector<long long>{2, 2});
  CHECK(default_degree_split(5, Polarization{{1, 1, 1}}) == std::vector<long long>{2, 2, 1});
  CHECK(default_degree_split(-3, Polarization{{1, 1}}) == std::vector<long long>{-1, -2});
  CHECK(default_degree_split(0, Polarization{{4, 9}}) == std::vector<long long>{0, 0});
}
