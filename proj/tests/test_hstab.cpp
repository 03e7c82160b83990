#include "vecpic/hstab.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vecpic;

namespace {

TwoComponentConfig config(int g1, int g2, int N, int r, int q, std::int64_t d) {
  TwoComponentConfig c;
  c.g1 = g1;
  c.g2 = g2;
  c.N = N;
  c.r = r;
  c.q = q;
  c.d = d;
  return c;
}

// Every valid configuration with the given box, sweeping d over one period.
std::vector<TwoComponentConfig> validConfigs(int maxG, int maxN, int maxR) {
  std::vector<TwoComponentConfig> out;
  for (int g1 = 1; g1 <= maxG; ++g1)
    for (int g2 = g1; g2 <= maxG; ++g2)
      for (int N = 1; N <= maxN; ++N)
        for (int r = 1; r <= maxR; ++r)
          for (int q = 1; q <= r; ++q) {
            if (r % q) continue;
            auto c = config(g1, g2, N, r, q, 0);
            if (c.genus() < 2) continue;
            for (std::int64_t d = 0; d < r * c.omegaC(); ++d) {
              c.d = d;
              if (c.isValid()) out.push_back(c);
            }
          }
  return out;
}

}  // namespace

TEST(ChiValues, Example) {
  auto c = config(2, 2, 1, 2, 2, 2);
  ASSERT_TRUE(c.isValid());
  EXPECT_EQ(c.omega1(), 3);
  EXPECT_EQ(c.omegaC(), 6);
  EXPECT_EQ(c.d1(), 0);
  EXPECT_EQ(c.d2(), 2);
  EXPECT_EQ(chiValues(c).E, -4);
  c.n = 1;
  EXPECT_EQ(chiValues(c).E, -4 + 2 * 6);
}

TEST(ChiValues, MultidegreeConditionIdentity) {
  for (auto c : validConfigs(3, 3, 4)) {
    const auto v = chiValues(c);
    ASSERT_EQ(v.EC1 * c.omegaC(), v.E * c.omega1()) << c.g1 << c.g2 << c.N << c.r << c.d;
    ASSERT_EQ(v.EC1 + v.EC2 - c.r * c.N, v.E);
    ASSERT_EQ(v.F.front(), v.F0);
    ASSERT_EQ(v.F.back() + v.G * 1 - v.F0, v.G * c.summands());
  }
}

TEST(TwoComponentConfig, Validation) {
  EXPECT_FALSE(config(2, 1, 1, 2, 2, 2).isValid());
  EXPECT_FALSE(config(1, 1, 1, 3, 2, 0).isValid());
  EXPECT_FALSE(config(2, 2, 1, 2, 2, 1).isValid());  // d1 = 1/2 - 1
  EXPECT_THROW(config(2, 2, 1, 2, 2, 1).require(), ValidationError);
  auto c = config(2, 2, 1, 2, 1, 2);
  c.alphas = {Rational(1)};
  EXPECT_FALSE(c.isValid());
  c.alphas = {Rational(1), Rational(-1)};
  EXPECT_FALSE(c.isValid());
  EXPECT_THROW(weightPolynomial(c), ValidationError);
}

TEST(WeightPolynomial, ZeroWeightsGiveZero) {
  auto c = config(2, 2, 1, 2, 1, 2);
  c.alphas = {Rational(0), Rational(0)};
  EXPECT_TRUE(weightPolynomial(c).isZero());
}

TEST(WeightPolynomial, DestabilizingVertexVanishes) {
  auto c = config(2, 2, 1, 2, 1, 2);
  c.alphas = {Rational(1), Rational(0)};
  EXPECT_TRUE(weightPolynomial(c).isZero());
}

TEST(WeightPolynomial, LeadingCoefficientNonpositive) {
  auto c = config(2, 2, 1, 2, 1, 2);
  c.alphas = {Rational(0), Rational(1)};
  const auto P = weightPolynomial(c);
  ASSERT_FALSE(P.isZero());
  const auto n0 = positivityThreshold(c);
  for (std::int64_t n = n0; n <= n0 + 20; ++n) {
    const auto Pn = P.substitute(0, Rational(n));
    EXPECT_LE(Pn.coefficient({0, 2}), 0) << n;
  }
}

TEST(WeightPolynomial, AlphaLinearity) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(0, 9), den(1, 5);
  auto configs = validConfigs(3, 2, 4);
  for (std::size_t t = 0; t < configs.size(); t += 7) {
    auto c = configs[t];
    const std::size_t k = static_cast<std::size_t>(c.summands());
    std::vector<Rational> a(k), b(k), sum(k);
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = Rational(num(rng), den(rng));
      b[i] = Rational(num(rng), den(rng));
      sum[i] = a[i] + b[i];
    }
    auto ca = c, cb = c, cs = c, c3 = c;
    ca.alphas = a;
    cb.alphas = b;
    cs.alphas = sum;
    c3.alphas = a;
    for (auto& x : c3.alphas) x *= 3;
    const auto Pa = weightPolynomial(ca);
    ASSERT_EQ(weightPolynomial(cs), Pa + weightPolynomial(cb));
    ASSERT_EQ(weightPolynomial(c3), WeightPolynomial(Rational(3)) * Pa);
  }
}

TEST(HStab, WitnessExamples) {
  const auto rep = isHSemistableWitness(config(2, 2, 1, 2, 1, 2));
  EXPECT_EQ(rep.verdict, HVerdict::strictlySemistable);
  EXPECT_EQ(rep.vanishingVertices, std::vector<int>{0});
  EXPECT_TRUE(rep.allNonpositive);

  // r = q: the single vertex is the N-node subgroup itself
  const auto one = isHSemistableWitness(config(2, 2, 1, 2, 2, 2));
  EXPECT_EQ(one.vertexPolynomials.size(), 1u);
  EXPECT_EQ(one.verdict, HVerdict::strictlySemistable);

  // d1 + 1 with integral summand degree: q = r, or two nodes so the box is wide enough
  auto shifted = config(2, 2, 1, 2, 2, 2);
  shifted.d1Offset = 1;
  ASSERT_TRUE(shifted.isValid());
  const auto off = isHSemistableWitness(shifted);
  EXPECT_EQ(off.verdict, HVerdict::inconclusive);
  EXPECT_TRUE(off.vanishingVertices.empty());

  auto wide = config(2, 2, 2, 2, 1, 4);
  ASSERT_EQ(wide.d1(), 0);
  wide.d1Offset = 2;
  ASSERT_TRUE(wide.isValid());
  ASSERT_NE(basicInequalitySlack(wide.graph(), wide.multidegree(), Subcurve::of(wide.graph(), {"C1"})), 0);
  const auto inner = isHSemistableWitness(wide);
  EXPECT_EQ(inner.verdict, HVerdict::inconclusive);
  EXPECT_TRUE(inner.vanishingVertices.empty());
}

TEST(HStabProperties, GridOfValidConfigs) {
  const auto configs = validConfigs(3, 2, 4);
  ASSERT_GT(configs.size(), 50u);
  for (const auto& c : configs) {
    const auto rep = isHSemistableWitness(c);
    ASSERT_EQ(rep.verdict, HVerdict::strictlySemistable) << c.g1 << "," << c.g2 << "," << c.N << "," << c.r << "," << c.q << "," << c.d;
    ASSERT_EQ(rep.vanishingVertices, std::vector<int>{0});
  }
}

TEST(HStabProperties, ExtremalityCrossCheck) {
  for (const auto& c : validConfigs(3, 3, 4)) {
    const auto G = c.graph();
    const auto M = c.multidegree();
    ASSERT_EQ(basicInequalitySlack(G, M, Subcurve::of(G, {"C1"})), 0);
    ASSERT_TRUE(isBalanced(G, M));
  }
}

TEST(PSlope, Examples) {
  const auto c = config(2, 2, 1, 2, 1, 2);
  const auto ext = pSlopeCheck(c.graph(), c.multidegree(), 1);
  EXPECT_TRUE(ext.violations.empty());
  bool rankSide = false;
  for (const auto& e : ext.saturations) rankSide = rankSide || ((e.m1 == 0 && e.m2 == 2) || (e.m1 == 2 && e.m2 == 0));
  EXPECT_TRUE(rankSide);

  // degrees (1,1) on the genus 2 + genus 2 one-node curve sit strictly inside the box
  const auto G = c.graph();
  const auto inner = pSlopeCheck(G, Multidegree(2, {{"C1", 1}, {"C2", 1}}), 1);
  EXPECT_TRUE(inner.violations.empty());
  EXPECT_TRUE(inner.saturations.empty());

  const auto bad = pSlopeCheck(G, Multidegree(2, {{"C1", -2}, {"C2", 4}}), 1);
  EXPECT_FALSE(bad.violations.empty());

  DualGraph three({{"a", 1}, {"b", 1}, {"c", 1}}, {{"a", "b"}, {"b", "c"}});
  EXPECT_THROW(pSlopeCheck(three, Multidegree(2, {{"a", 0}, {"b", 0}, {"c", 0}}), 1), DomainError);
}
