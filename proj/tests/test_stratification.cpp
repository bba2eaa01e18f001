#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <set>
#include <tuple>

#include "jacstrat/examples_suite.hpp"
#include "jacstrat/stratification.hpp"
#include "support/test_graphs.hpp"

using namespace jacstrat;

namespace {

std::set<std::vector<long long>> codim0_multidegrees(const Stratification& s) {
  std::set<std::vector<long long>> out;
  for (const auto& st : s.strata) {
    if (st.codim == 0) out.insert(st.e);
  }
  return out;
}

}  // namespace

TEST_CASE("dollar sign strata") {
  const auto g = example_dollar_sign();
  const auto s = enumerate_strata(g);

  CHECK(s.strata.size() == 6);
  REQUIRE(s.by_codim.size() == 3);
  CHECK(s.by_codim.at(0) == 2);
  CHECK(s.by_codim.at(1) == 3);
  CHECK(s.by_codim.at(2) == 1);

  const std::set<std::vector<long long>> expected = {{2, 1}, {1, 2}};
  CHECK(codim0_multidegrees(s) == expected);

  // The deepest stratum keeps no edges and has e = 0, d = (-1, -1).
  const auto& deep = s.strata.back();
  CHECK(deep.codim == 2);
  CHECK(deep.kept_edges == 0);
  CHECK(deep.e == std::vector<long long>{0, 0});
  CHECK(deep.d == std::vector<long long>{-1, -1});

  // Codimension 1 strata keep exactly two of the three parallel edges.
  for (const auto& st : s.strata) {
    if (st.codim != 1) continue;
    CHECK(std::popcount(st.kept_edges) == 2);
    CHECK(st.e == std::vector<long long>{1, 1});
  }
}

TEST_CASE("strata are sorted by codim, then kept edge mask, then e") {
  const auto s = enumerate_strata(example_parallel_edges(4));
  for (std::size_t i = 1; i < s.strata.size(); ++i) {
    const auto& a = s.strata[i - 1];
    const auto& b = s.strata[i];
    CHECK(std::tie(a.codim, a.kept_edges, a.e) < std::tie(b.codim, b.kept_edges, b.e));
  }
}

TEST_CASE("every stratum is componentwise stable on its subgraph") {
  for (const auto& g : testsupport::connected_corpus(3, 4)) {
    const auto s = enumerate_strata(g);
    for (const auto& st : s.strata) {
      const auto sub = GeneratingSubgraph::of_mask(g, st.kept_edges);
      CHECK(check_componentwise({st.e}, sub).verdict == Verdict::Stable);
      CHECK(st.codim == cyclomatic_number(GeneratingSubgraph::full(g)) - cyclomatic_number(sub));
    }
  }
}

TEST_CASE("forest fast path agrees with the general enumeration") {
  const auto g = example_forest();
  const auto fast = strata_for_forest(g);
  const auto slow = enumerate_strata(g);

  REQUIRE(fast.strata.size() == 1);
  REQUIRE(slow.strata.size() == 1);
  CHECK(fast.strata[0].kept_edges == 0);
  CHECK(fast.strata[0].e == std::vector<long long>(6, 0));
  CHECK(fast.strata[0].codim == 0);
  CHECK(fast.strata[0].kept_edges == slow.strata[0].kept_edges);
  CHECK(fast.strata[0].e == slow.strata[0].e);
  CHECK(fast.strata[0].d == slow.strata[0].d);

  // d recovers the per-vertex genus offset: d_i = g_i - 1.
  const std::vector<long long> expected_d = {-1, 0, -1, 1, -1, 0};
  CHECK(fast.strata[0].d == expected_d);

  CHECK_THROWS_AS(strata_for_forest(example_dollar_sign()), ValidationError);
}

TEST_CASE("bridges never appear in a stratum subgraph") {
  // Triangle with a pendant edge: the pendant is a bridge, so every
  // stratum lives inside the triangle.
  const auto g = CurveGraph({{"a", 0}, {"b", 1}, {"c", 0}, {"d", 2}},
                            {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  const auto s = enumerate_strata(g);
  REQUIRE(s.by_codim.size() == 2);
  CHECK(s.by_codim.at(0) == 1);
  CHECK(s.by_codim.at(1) == 1);
  for (const auto& st : s.strata) CHECK((st.kept_edges & (1u << 3)) == 0);

  // Codim 0: the full triangle, e = indegrees of its unique stable class.
  CHECK(s.strata[0].kept_edges == 0b0111);
  CHECK(s.strata[0].e == std::vector<long long>{1, 1, 1, 0});
}

TEST_CASE("stratum dimension is the genus sum plus the subgraph cycle rank") {
  const auto g = example_dollar_sign();
  const auto s = enumerate_strata(g);
  const long long genus = 2;  // arithmetic genus of the dollar sign
  for (const auto& st : s.strata) {
    CHECK(stratum_dimension(st, g) == genus - st.codim);
  }

  // Disconnected graphs keep the formula through the genus sum.
  const auto two = example_two_components();
  const auto s2 = enumerate_strata(two);
  REQUIRE(s2.strata.size() == 1);
  CHECK(stratum_dimension(s2.strata[0], two) == 3);
}

TEST_CASE("loop graphs stratify like subsets of loops") {
  for (int n = 1; n <= 4; ++n) {
    const auto s = enumerate_strata(example_irreducible_nodes(n));
    for (int k = 0; k <= n; ++k) {
      CHECK(s.by_codim.at(n - k) == testsupport::binomial(n, k));
    }
  }
}

TEST_CASE("edge cap is enforced and adjustable") {
  const auto g = example_dollar_sign();
  StrataOptions tight;
  tight.max_edges = 2;
  CHECK_THROWS_AS(enumerate_strata(g, tight), CapExceededError);
  CHECK_THROWS_AS(enumerate_strata_serial(g, tight), CapExceededError);

  StrataOptions loose;
  loose.max_edges = 3;
  CHECK(enumerate_strata(g, loose).strata.size() == 6);
}

TEST_CASE("serial and parallel enumerations are identical") {
  for (const auto& g : testsupport::connected_corpus(3, 5)) {
    const auto a = enumerate_strata_serial(g);
    StrataOptions opt;
    opt.jobs = 3;
    const auto b = enumerate_strata(g, opt);
    REQUIRE(a.strata.size() == b.strata.size());
    for (std::size_t i = 0; i < a.strata.size(); ++i) {
      CHECK(a.strata[i].kept_edges == b.strata[i].kept_edges);
      CHECK(a.strata[i].e == b.strata[i].e);
      CHECK(a.strata[i].d == b.strata[i].d);
      CHECK(a.strata[i].codim == b.strata[i].codim);
    }
    CHECK(a.by_codim == b.by_codim);
  }
}
