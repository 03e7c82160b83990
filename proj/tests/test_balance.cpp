#include "vecpic/balance.hpp"

#include "support/random_graphs.hpp"

#include <gtest/gtest.h>

using namespace vecpic;

namespace {

DualGraph g3TwoComponents() { return DualGraph({{"E", 1}, {"F", 2}}, {{"E", "F"}}); }

// Independent oracle: |deg_Z − dω_Z/ω_C| ≤ rk_Z/2 evaluated in long double-free integer arithmetic
// from the raw edge list, without DualGraph helpers.
bool naiveBalanced(const std::vector<int>& genus, const std::vector<std::pair<int, int>>& edges,
                   const std::vector<std::int64_t>& deg, int r) {
  const int n = static_cast<int>(genus.size());
  int g = 1 - n + static_cast<int>(edges.size());
  for (int x : genus) g += x;
  const std::int64_t wC = 2 * g - 2;
  std::int64_t d = 0;
  for (auto x : deg) d += x;
  for (int m = 1; m < (1 << n) - 1; ++m) {
    std::int64_t degZ = 0, wZ = 0, k = 0;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) {
        degZ += deg[v];
        wZ += 2 * genus[v] - 2;
      }
    for (auto [a, b] : edges) {
      const bool ia = m >> a & 1, ib = m >> b & 1;
      if (ia && ib) wZ += 2;
      if (ia != ib) {
        ++k;
        ++wZ;
      }
    }
    const std::int64_t lhs = 2 * (degZ * wC - d * wZ);
    if (lhs > r * k * wC || -lhs > r * k * wC) return false;
  }
  return true;
}

}  // namespace

TEST(Multidegree, TotalAndValidation) {
  Multidegree M(2, {{"E", -1}, {"F", 1}});
  EXPECT_EQ(M.totalDegree(), 0);
  EXPECT_THROW(Multidegree(0, {{"E", 0}}), ValidationError);
  auto G = g3TwoComponents();
  EXPECT_THROW(Multidegree(2, {{"E", 0}}).aligned(G), ValidationError);
  EXPECT_THROW(Multidegree(2, {{"E", 0}, {"X", 0}}).aligned(G), ValidationError);
}

TEST(BasicInequalitySlack, ExtremalCompactTypeIsSaturated) {
  auto G = g3TwoComponents();
  Multidegree M(2, {{"E", -1}, {"F", 1}});
  EXPECT_EQ(basicInequalitySlack(G, M, Subcurve::of(G, {"E"})), Rational(0));
}

TEST(BasicInequalitySlack, TrivialMultidegreeHasSlackOne) {
  auto G = g3TwoComponents();
  Multidegree M(2, {{"E", 0}, {"F", 0}});
  EXPECT_EQ(basicInequalitySlack(G, M, Subcurve::of(G, {"E"})), Rational(1));
}

TEST(BasicInequalitySlack, Errors) {
  auto G = g3TwoComponents();
  Multidegree M(2, {{"E", 0}, {"F", 0}});
  EXPECT_THROW(basicInequalitySlack(G, M, Subcurve{G.fullMask()}), ValidationError);
  DualGraph ell({{"a", 0}, {"b", 0}}, {{"a", "b"}, {"a", "b"}});
  Multidegree N(1, {{"a", 0}, {"b", 0}});
  EXPECT_THROW(basicInequalitySlack(ell, N, Subcurve::of(ell, {"a"})), DomainError);
}

TEST(IsBalanced, ExamplesInAllModes) {
  auto G = g3TwoComponents();
  for (auto mode : {BalanceMode::all, BalanceMode::connectedBothSides, BalanceMode::oneSidedConnected}) {
    EXPECT_TRUE(isBalanced(G, Multidegree(2, {{"E", -1}, {"F", 1}}), mode));
    EXPECT_FALSE(isBalanced(G, Multidegree(2, {{"E", -2}, {"F", 2}}), mode));
  }
  DualGraph smooth({{"C", 4}}, {});
  EXPECT_TRUE(isBalanced(smooth, Multidegree(3, {{"C", 1000}})));
}

TEST(IsBalanced, SaturatedSubcurves) {
  auto G = g3TwoComponents();
  auto sat = saturatedSubcurves(G, Multidegree(2, {{"E", -1}, {"F", 1}}));
  ASSERT_EQ(sat.size(), 2u);  // Z and its complement
  EXPECT_TRUE(saturatedSubcurves(G, Multidegree(2, {{"E", 0}, {"F", 0}})).empty());
}

TEST(BalanceChecker, MatchesNaiveOracleAndRationalRoute) {
  std::mt19937 rng(21);
  int balancedSeen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(testsupport::uniform(rng, 2, 6));
    auto G = testsupport::randomGraph(rng, n, static_cast<int>(testsupport::uniform(rng, 0, 4)), 2);
    if (omegaC(G) <= 0) continue;
    std::vector<int> genus;
    for (const auto& v : G.vertices()) genus.push_back(v.genus);
    BalanceChecker bc(G);
    for (int s = 0; s < 40; ++s) {
      const int r = static_cast<int>(testsupport::uniform(rng, 1, 4));
      std::vector<std::int64_t> deg(n);
      for (auto& x : deg) x = testsupport::uniform(rng, -2 * r, 2 * r);
      const auto M = Multidegree::onGraph(G, r, deg);
      const bool oracle = naiveBalanced(genus, G.edges(), deg, r);
      ASSERT_EQ(bc.check(deg, r, BalanceMode::all), oracle);
      ASSERT_EQ(isBalanced(G, M, BalanceMode::all), oracle);
      const auto v = bc.classify(deg, r);
      ASSERT_EQ(v.all, oracle);
      ASSERT_EQ(v.connectedBothSides, isBalanced(G, M, BalanceMode::connectedBothSides));
      ASSERT_EQ(v.oneSidedConnected, isBalanced(G, M, BalanceMode::oneSidedConnected));
      ASSERT_EQ(bc.check(deg, r, BalanceMode::connectedBothSides), v.connectedBothSides);
      ASSERT_EQ(bc.check(deg, r, BalanceMode::oneSidedConnected), v.oneSidedConnected);
      balancedSeen += oracle;
    }
  }
  EXPECT_GT(balancedSeen, 50);
}

TEST(BalanceProperties, SlackIsSymmetricUnderComplement) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(testsupport::uniform(rng, 2, 5));
    auto G = testsupport::randomGraph(rng, n, 2, 2);
    if (omegaC(G) <= 0) continue;
    std::vector<std::int64_t> deg(n);
    for (auto& x : deg) x = testsupport::uniform(rng, -6, 6);
    const auto M = Multidegree::onGraph(G, 3, deg);
    for (const auto& z : enumerateSubcurves(G, SubcurveMode::all))
      ASSERT_EQ(basicInequalitySlack(G, M, z), basicInequalitySlack(G, M, z.complement(G)));
  }
}

TEST(ProperlyBalanced, StableBalancedPasses) {
  auto G = g3TwoComponents();
  auto rep = properlyBalancedNecessary(G, Multidegree(2, {{"E", -1}, {"F", 1}}));
  EXPECT_TRUE(rep.ok) << rep.diagnostic;
}

TEST(ProperlyBalanced, LengthOneChainCarryingRankPasses) {
  // bridge R between two genus-2 components, degrees (d1, r, d2) with d = 0, r = 2
  DualGraph G({{"A", 2}, {"R", 0}, {"B", 2}}, {{"A", "R"}, {"R", "B"}});
  auto rep = properlyBalancedNecessary(G, Multidegree(2, {{"A", -1}, {"R", 2}, {"B", -1}}));
  EXPECT_TRUE(rep.ok) << rep.diagnostic;
}

TEST(ProperlyBalanced, ZeroDegreeOnChainVertexFails) {
  DualGraph G({{"A", 2}, {"R1", 0}, {"R2", 0}, {"B", 2}}, {{"A", "R1"}, {"R1", "R2"}, {"R2", "B"}});
  auto rep = properlyBalancedNecessary(G, Multidegree(2, {{"A", 0}, {"R1", 1}, {"R2", 0}, {"B", -1}}));
  EXPECT_FALSE(rep.ok);
  EXPECT_NE(rep.diagnostic.find("R2"), std::string::npos);
}

TEST(ProperlyBalanced, RejectsNonSemistable) {
  DualGraph G({{"A", 2}, {"T", 0}}, {{"A", "T"}});
  EXPECT_THROW(properlyBalancedNecessary(G, Multidegree(1, {{"A", 0}, {"T", 0}})), ValidationError);
}

TEST(BalanceProperties, ProperlyBalancedImpliesBalanced) {
  std::mt19937 rng(23);
  int positives = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = static_cast<int>(testsupport::uniform(rng, 2, 5));
    auto G = testsupport::randomGraph(rng, n, static_cast<int>(testsupport::uniform(rng, 0, 3)), 2);
    if (!G.isSemistable() || arithmeticGenus(G) < 2) continue;
    std::vector<std::int64_t> deg(n);
    for (auto& x : deg) x = testsupport::uniform(rng, -3, 3);
    const auto M = Multidegree::onGraph(G, 2, deg);
    ProperBalanceReport rep;
    try {
      rep = properlyBalancedNecessary(G, M);
    } catch (const DomainError&) {
      continue;  // all-rational cycle
    }
    if (rep.ok) {
      ++positives;
      ASSERT_TRUE(isBalanced(G, M));
    }
  }
  EXPECT_GT(positives, 20);
}
