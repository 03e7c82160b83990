#include "vecpic/invariants.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace vecpic;

namespace {

std::int64_t g3(std::int64_t a, std::int64_t b, std::int64_t c) { return std::gcd(std::gcd(a, b), c); }

}  // namespace

TEST(MakeContext, Examples) {
  auto c = makeContext(2, 3, 3);
  EXPECT_EQ(c.n_rd, 1);
  EXPECT_EQ(c.v_rdg, 1);
  EXPECT_EQ(c.k_rdg, 4);
  auto z = makeContext(2, 0, 3);
  EXPECT_EQ(z.n_rd, 2);
  EXPECT_EQ(z.v_rdg, 2);
  EXPECT_EQ(z.k_rdg, 1);
  for (std::int64_t g = 2; g <= 7; ++g) EXPECT_EQ(makeContext(1, g - 1, g).v_rdg, 2 * g - 2);
}

TEST(MakeContext, Errors) {
  EXPECT_THROW(makeContext(2, 0, 1), DomainError);
  EXPECT_THROW(makeContext(0, 0, 3), DomainError);
}

TEST(ResWeights, Examples) {
  EXPECT_EQ(resWeights(makeContext(2, 3, 3)), (Exponents4{0, 2, 10, -1}));
  EXPECT_EQ(resWeights(makeContext(1, 0, 2)), (Exponents4{0, -1, 1, -1}));
  EXPECT_EQ(resWeights(makeContext(3, 6, 3))[3], 0);
}

TEST(ResImageGenerator, Examples) {
  EXPECT_EQ(resImageGenerator(makeContext(2, 3, 3)), 1);
  EXPECT_EQ(resImageGenerator(makeContext(2, 0, 3)), 4);
  for (std::int64_t d = -5; d <= 5; ++d)
    for (std::int64_t g = 2; g <= 5; ++g) {
      auto c = makeContext(1, d, g);
      EXPECT_EQ(resImageGenerator(c), c.v_rdg);
    }
}

TEST(XiTheta, Examples) {
  auto c = makeContext(2, 3, 3);
  auto xt = xiThetaBasis(c);
  EXPECT_EQ(xt.xi, (Exponents4{0, 5, -1, 0}));
  for (std::int64_t d = -6; d <= 6; ++d) EXPECT_EQ(xiThetaBasis(makeContext(1, d, 4)).theta[3], 1);
}

TEST(Poincare, Examples) {
  EXPECT_TRUE(poincareBundleExists(makeContext(2, 1, 2)));
  EXPECT_FALSE(poincareBundleExists(makeContext(2, 0, 3)));
  EXPECT_TRUE(poincareBundleExists(makeContext(1, 0, 2)));
}

// Each invariant recomputed from its definition, without the library's gcd helpers.
TEST(InvariantsProperties, ExhaustiveGrid) {
  for (std::int64_t r = 1; r <= 6; ++r)
    for (std::int64_t d = -20; d <= 20; ++d)
      for (std::int64_t g = 2; g <= 8; ++g) {
        SCOPED_TRACE(::testing::Message() << "r=" << r << " d=" << d << " g=" << g);
        auto c = makeContext(r, d, g);
        const std::int64_t n = std::gcd(r, d);
        const std::int64_t v = g3(d / n + (r / n) * (1 - g), d + 1 - g, 2 * g - 2);
        ASSERT_EQ(c.n_rd, n);
        ASSERT_EQ(c.v_rdg, v);
        ASSERT_EQ(c.k_rdg, (2 * g - 2) / std::gcd(2 * g - 2, d + r * (1 - g)));
        const auto w = resWeights(c);
        ASSERT_EQ(std::gcd(std::gcd(w[0], w[1]), std::gcd(w[2], w[3])), n * v);
        ASSERT_EQ(resImageGenerator(c), n * v);
        ASSERT_EQ(poincareBundleExists(c), g3(d + r * (1 - g), r * (d + 1 - g), r * (2 * g - 2)) == 1);

        auto xt = xiThetaBasis(c);
        const std::int64_t v1 = std::gcd(d + 1 - g, 2 * g - 2);
        ASSERT_EQ(xt.xi[1] * v1, d + g - 1);
        ASSERT_EQ(xt.xi[2] * v1, -(d - g + 1));
        ASSERT_EQ(xt.alpha * (d + 1 - g) + xt.beta * (d + g - 1), -((d + r * (1 - g)) / n) * (v1 / v));
        ASSERT_EQ(xt.theta[3], (r / n) * (v1 / v));
        ASSERT_EQ(pairWithWeights(c, xt.xi), 0);
        ASSERT_EQ(pairWithWeights(c, xt.theta), 0);
        // canonical choice: no solution has smaller |α|
        if (d + 1 - g != 0 && d + g - 1 != 0) {
          const std::int64_t rhs = -((d + r * (1 - g)) / n) * (v1 / v);
          for (std::int64_t a = -std::abs(xt.alpha) + 1; a < std::abs(xt.alpha); ++a)
            ASSERT_NE((rhs - a * (d + 1 - g)) % (d + g - 1), 0) << "alpha " << a << " also solves";
        }
      }
}
