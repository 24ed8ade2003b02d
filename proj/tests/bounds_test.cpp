#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "cszidx/bounds.hpp"
#include "cszidx/search.hpp"
#include "cszidx/serialize.hpp"

namespace cszidx {
namespace {

TEST(MdegBound, SmallestOrder) {
  EXPECT_NEAR(mdeg_bound(4), 2.1035, 1e-4);
  EXPECT_LT(mdeg_bound(4), 5352.0 * 4 / 10000);
  EXPECT_THROW(mdeg_bound(3), PreconditionError);
}

TEST(MdegBound, AsymptoticSlope) {
  const double slope = (std::sqrt(52.0) - 4.0) / 6.0;
  EXPECT_NEAR(mdeg_bound(1000000) / 1e6, slope, 1e-5);
  EXPECT_LT(slope, 0.5352);
  EXPECT_GT(slope, 0.5351);
}

TEST(MdegQuadratic, Examples) {
  EXPECT_EQ(mdeg_quadratic(4, 2), -2);
  EXPECT_TRUE(within_mdeg_bound(4, 2));
  EXPECT_FALSE(within_mdeg_bound(4, 3));
  EXPECT_EQ(mdeg_quadratic(4, 0), -28);
}

TEST(MdegBound, QuadraticAgreesWithFloatingBound) {
  for (std::size_t n = 4; n <= 1000; ++n) {
    const auto r = mdeg_root_consistency_check(n);
    ASSERT_TRUE(r.holds) << r.instance << " mismatches=" << std::get<std::int64_t>(r.lhs);
  }
}

TEST(MdegBound, FloorAndCeilingBracketTheRoot) {
  for (std::size_t n = 4; n <= 10000; ++n) {
    const double b = mdeg_bound(n);
    ASSERT_LE(mdeg_quadratic(n, static_cast<std::size_t>(std::floor(b))), 0) << n;
    ASSERT_GT(mdeg_quadratic(n, static_cast<std::size_t>(std::ceil(b)) + 1), 0) << n;
  }
}

TEST(MdegBound, IntegerRootIsExact) {
  EXPECT_EQ(mdeg_quadratic(86, 46), 0);
  EXPECT_EQ(mdeg_bound(86), 46.0);
}

TEST(MdegBound, CorollaryHoldsOnRange) {
  for (std::size_t n = 4; n <= 1000000; ++n) {
    const auto r = mdeg_corollary_check(n);
    ASSERT_TRUE(r.holds) << r.instance;
    ASSERT_TRUE(r.strict);
  }
}

TEST(MdegCount, JoinGraphs) {
  EXPECT_TRUE(mdeg_count_check(make_join({10, 4})).holds);
  EXPECT_FALSE(mdeg_count_check(make_join({10, 7})).holds);
}

TEST(OptimalKChecks, ReportsScopeAndStrictness) {
  const auto r100 = optimal_k(100);
  EXPECT_TRUE(optimal_k_lower_check(r100).holds);
  EXPECT_TRUE(optimal_k_upper_check(r100).holds);
  EXPECT_TRUE(optimal_k_half_check(r100).holds);

  // k = 6 = 4n/10 at n = 15 misses the strict upper inequality.
  const auto r15 = optimal_k(15);
  EXPECT_EQ(r15.best_k, (std::vector<std::size_t>{6}));
  const auto up = optimal_k_upper_check(r15);
  EXPECT_FALSE(up.holds);
  EXPECT_TRUE(up.equality);
  EXPECT_TRUE(up.in_scope);

  // Below n = 11 the interval check is reported but not asserted.
  EXPECT_FALSE(optimal_k_lower_check(optimal_k(10)).in_scope);
}

TEST(Lemma5, Examples) {
  const auto r = lemma5_check(1, 1, 2, 1, 2, 3);
  EXPECT_DOUBLE_EQ(as_double(r.lhs), 19.0);
  EXPECT_DOUBLE_EQ(as_double(r.rhs), 24.0);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.equality);

  EXPECT_TRUE(lemma5_check(2, 3, 5, 4, 4, 4).equality);  // x = y = z
  EXPECT_TRUE(lemma5_check(3, 1, 3, 1, 2, 5).equality);  // a = c
  EXPECT_THROW(lemma5_check(-1, 0, 0, 0, 1, 2), PreconditionError);
  EXPECT_THROW(lemma5_check(1, 1, 1, 2, 1, 3), PreconditionError);
}

TEST(Lemma5, RandomInstances) {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> draw(0.0, 100.0);
  for (int t = 0; t < 1000000; ++t) {
    double v[3] = {draw(rng), draw(rng), draw(rng)};
    std::sort(v, v + 3);
    const auto r = lemma5_check(draw(rng), draw(rng), draw(rng), v[0], v[1], v[2]);
    ASSERT_TRUE(r.holds) << r.instance;
  }
}

TEST(Lemma5, EqualWeightsGiveEqualityOnRandomInstances) {
  std::mt19937_64 rng(56);
  std::uniform_real_distribution<double> draw(0.0, 100.0);
  for (int t = 0; t < 100000; ++t) {
    double v[3] = {draw(rng), draw(rng), draw(rng)};
    std::sort(v, v + 3);
    const double a = draw(rng);
    ASSERT_TRUE(lemma5_check(a, draw(rng), a, v[0], v[1], v[2]).equality);
  }
}

TEST(Lemma5, TiedDegreesWithinRoundingHold) {
  // y = z makes both sides (b + c)(z^2 - x^2) up to rounding.
  EXPECT_TRUE(lemma5_check(80.866431, 39.572973, 87.402380, 46, 48, 48).holds);
}

TEST(Bidegreed, JoinAttainsTheBound) {
  const auto r = bidegreed_bound_check(make_join({12, 4}));
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.equality);
  EXPECT_EQ(std::get<std::int64_t>(r.lhs), 3360);
}

TEST(Bidegreed, StrictWhenLowDegreeExceedsCliqueSize) {
  // K_2 joined with C_4: degrees 5,5 and 4,4,4,4.
  Graph g = make_join({6, 2});
  g = toggle_edge(toggle_edge(toggle_edge(toggle_edge(g, 2, 3), 3, 4), 4, 5), 5, 2);
  const auto r = bidegreed_bound_check(g);
  EXPECT_EQ(std::get<std::int64_t>(r.lhs), 72);
  EXPECT_EQ(std::get<std::int64_t>(r.rhs), 168);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.equality);
}

TEST(Bidegreed, RejectsOtherClasses) {
  EXPECT_THROW(bidegreed_bound_check(from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}})),
               PreconditionError);
  EXPECT_THROW(bidegreed_bound_check(from_edge_list(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST(Bidegreed, ExhaustiveOverSmallCorpus) {
  std::size_t checked = 0;
  for (std::size_t n = 3; n <= 7; ++n) {
    for_each_connected_graph(n, SearchMode::universal_vertex, [&](const Graph& g) {
      if (degree_partition(g).classes() != 2) return;
      const auto r = bidegreed_bound_check(g);
      if (!r.holds) ADD_FAILURE() << to_graph6(g);
      ++checked;
    });
  }
  EXPECT_GT(checked, 100U);
}

TEST(Tridegreed, PawIsBelowTheJoinMaximum) {
  const Graph paw = from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  const auto r = tridegreed_bound_check(paw);
  EXPECT_EQ(std::get<std::int64_t>(r.lhs), 18);
  EXPECT_EQ(std::get<std::int64_t>(r.rhs), 24);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.in_scope);
}

TEST(Tridegreed, RandomInstancesInScope) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 11 + seed % 60;
    const Graph g = random_tridegreed(n, seed);
    const auto r = tridegreed_bound_check(g);
    ASSERT_TRUE(r.holds) << to_graph6(g);
    ASSERT_TRUE(r.in_scope);
  }
}

TEST(Tridegreed, ExhaustiveOverSmallCorpus) {
  // These orders lie below the claimed range; the strict inequality is still
  // checked on every tridegreed graph with a universal vertex.
  std::size_t checked = 0;
  for (std::size_t n = 4; n <= 8; ++n) {
    for_each_connected_graph(n, SearchMode::universal_vertex, [&](const Graph& g) {
      if (degree_partition(g).classes() != 3) return;
      if (!tridegreed_bound_check(g).holds) ADD_FAILURE() << to_graph6(g);
      ++checked;
    });
  }
  EXPECT_GT(checked, 1000U);
}

TEST(BoundSweep, OnlyFailuresAreTheIntervalBoundaryCases) {
  std::vector<std::string> failing;
  for (const auto& r : bound_sweep(4, 1000)) {
    if (r.in_scope && !r.holds) failing.push_back(r.name + " " + r.instance);
  }
  const std::vector<std::string> expected{
      "optimal_k_below_4n/10 n=12 k=5", "optimal_k_below_4n/10 n=15 k=6",
      "optimal_k_below_4n/10 n=20 k=8", "optimal_k_below_4n/10 n=25 k=10",
      "optimal_k_below_4n/10 n=30 k=12"};
  EXPECT_EQ(failing, expected);
}

TEST(BoundReport, Json) {
  const auto j = to_json(lemma5_check(1, 1, 2, 1, 2, 3));
  EXPECT_EQ(j.at("name"), "lemma5");
  EXPECT_EQ(j.at("holds"), true);
  EXPECT_DOUBLE_EQ(j.at("rhs").get<double>(), 24.0);
  EXPECT_EQ(to_json(mdeg_root_consistency_check(10)).at("lhs"), 0);
}

}  // namespace
}  // namespace cszidx
