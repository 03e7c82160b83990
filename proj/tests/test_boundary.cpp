#include "vecpic/balance.hpp"
#include "vecpic/boundary.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace vecpic;

namespace {

std::vector<std::pair<int, int>> indexPairs(const NumericalContext& c) {
  std::vector<std::pair<int, int>> out;
  for (const auto& b : boundaryIndices(c)) out.emplace_back(b.i, b.j);
  return out;
}

}  // namespace

TEST(BoundaryIndices, Examples) {
  EXPECT_EQ(indexPairs(makeContext(2, 0, 3)), (std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {1, 2}}));
  EXPECT_EQ(indexPairs(makeContext(2, 3, 3)), (std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(indexPairs(makeContext(2, 0, 4)),
            (std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}}));
}

TEST(BoundaryIndices, ExtremalFlags) {
  std::vector<std::string> ext;
  for (const auto& b : boundaryIndices(makeContext(2, 0, 3)))
    if (b.extremal) ext.push_back(b.symbol());
  EXPECT_EQ(ext, (std::vector<std::string>{"delta_1^0", "delta_1^2"}));
  // g/2 level: extremal only when d + r is even
  auto even = makeContext(2, 0, 4);
  auto odd = makeContext(2, 1, 4);
  EXPECT_TRUE(isExtremal(even, 2, 0));
  EXPECT_FALSE(isExtremal(odd, 2, 0));
}

TEST(GenericMultidegree, Examples) {
  EXPECT_EQ(genericMultidegree(makeContext(2, 0, 3), {1, 0, false}), (std::pair<std::int64_t, std::int64_t>{-1, 1}));
  EXPECT_EQ(genericMultidegree(makeContext(2, 1, 4), {2, 1, false}), (std::pair<std::int64_t, std::int64_t>{1, 0}));
  EXPECT_THROW(genericMultidegree(makeContext(2, 0, 3), {0, 0, false}), DomainError);
  EXPECT_THROW(genericMultidegree(makeContext(2, 3, 3), {1, 2, false}), DomainError);
}

TEST(PullbackDecomposition, Examples) {
  auto p0 = pullbackDecomposition(makeContext(2, 0, 3), 0);
  ASSERT_EQ(p0.size(), 1u);
  EXPECT_EQ(p0[0].first.symbol(), "delta_0");
  EXPECT_EQ(p0[0].second, 1);
  auto p1 = pullbackDecomposition(makeContext(2, 0, 3), 1);
  ASSERT_EQ(p1.size(), 3u);
  for (const auto& [b, coef] : p1) EXPECT_EQ(coef, 1);
}

TEST(BoundaryProperties, ExtremalIffSaturatedAndBalanced) {
  for (std::int64_t r = 1; r <= 5; ++r)
    for (std::int64_t d = -12; d <= 12; ++d)
      for (std::int64_t g = 2; g <= 8; ++g) {
        auto c = makeContext(r, d, g);
        for (const auto& b : boundaryIndices(c)) {
          for (const auto& [bb, coef] : pullbackDecomposition(c, b.i)) ASSERT_EQ(coef, 1);
          if (b.i == 0) continue;
          SCOPED_TRACE(::testing::Message() << "r=" << r << " d=" << d << " g=" << g << " " << b.symbol());
          const auto [d1, d2] = genericMultidegree(c, b);
          ASSERT_EQ(d1 + d2, d);
          auto G = twoComponentGraph(b.i, static_cast<int>(g));
          Multidegree M(static_cast<int>(r), {{"C1", d1}, {"C2", d2}});
          ASSERT_TRUE(isBalanced(G, M));
          ASSERT_EQ(basicInequalitySlack(G, M, Subcurve::of(G, {"C1"})) == 0, b.extremal);
        }
      }
}

// Distinct balanced multidegrees on the two-component curve, found by scanning d1 over a wide window.
// At i = g/2 the components are interchangeable, so (d1, d2) and (d2, d1) count once.
TEST(BoundaryProperties, LevelSizesAgainstScanAwayFromMiddle) {
  for (std::int64_t r = 1; r <= 5; ++r)
    for (std::int64_t d = -12; d <= 12; ++d)
      for (std::int64_t g = 3; g <= 8; ++g) {
        auto c = makeContext(r, d, g);
        for (int i = 1; 2 * i < g; ++i) {
          auto G = twoComponentGraph(i, static_cast<int>(g));
          int count = 0;
          for (std::int64_t d1 = -4 * r - 20; d1 <= 4 * r + 20; ++d1)
            count += isBalanced(G, Multidegree(static_cast<int>(r), {{"C1", d1}, {"C2", d - d1}}));
          ASSERT_EQ(count, static_cast<int>(boundaryLevel(c, i).size())) << "r=" << r << " d=" << d << " g=" << g << " i=" << i;
        }
      }
}

TEST(BoundaryProperties, MiddleLevelSizeWhenNotDoubled) {
  // J_{g/2} = {0..⌊r/2⌋} counts each unordered multidegree once unless r is even and d odd
  for (std::int64_t r = 1; r <= 5; ++r)
    for (std::int64_t d = -12; d <= 12; ++d)
      for (std::int64_t g = 2; g <= 8; g += 2) {
        auto c = makeContext(r, d, g);
        const int i = static_cast<int>(g / 2);
        auto G = twoComponentGraph(i, static_cast<int>(g));
        std::set<std::pair<std::int64_t, std::int64_t>> seen;
        for (std::int64_t d1 = -4 * r - 20; d1 <= 4 * r + 20; ++d1)
          if (isBalanced(G, Multidegree(static_cast<int>(r), {{"C1", d1}, {"C2", d - d1}})))
            seen.insert({std::min(d1, d - d1), std::max(d1, d - d1)});
        const auto listed = boundaryLevel(c, i).size();
        if (r % 2 == 0 && ((d % 2) + 2) % 2 == 1)
          EXPECT_EQ(listed, seen.size() + 1) << "r=" << r << " d=" << d << " g=" << g;
        else
          EXPECT_EQ(listed, seen.size()) << "r=" << r << " d=" << d << " g=" << g;
      }
}
