#include <gtest/gtest.h>

#include <bsurf/obstruction.hpp>
#include <bsurf/winding.hpp>

#include "oracles.hpp"

using namespace bsurf;

TEST(GraphIntersections, ConstantTwo) {
  const auto r = graph_intersections(Polynomial{2.0}, 0, 0.9);
  EXPECT_EQ(r.hyperbola.count, 1);
  EXPECT_EQ(r.line_one.count, 0);
  ASSERT_EQ(r.lines.size(), 1u);
  EXPECT_EQ(r.lines[0].count, 0);
}

TEST(GraphIntersections, ShiftedIdentityMeetsHyperbolaOnce) {
  const auto r = graph_intersections(Polynomial{5.0, 1.0}, 0, 0.9);
  EXPECT_EQ(r.hyperbola.count, 1);
  const auto roots = oracle::durand_kerner({-1.0, 5.0, 1.0});
  const int inside = static_cast<int>(std::count_if(roots.begin(), roots.end(), [](Complex z) { return std::abs(z) < 0.9; }));
  EXPECT_EQ(inside, 1);
  EXPECT_NEAR((-5.0 + std::sqrt(29.0)) / 2.0, 0.1926, 1e-4);
}

TEST(GraphIntersections, DegenerateLineIsFlagged) {
  const auto r = graph_intersections(Polynomial{0.0, 1.0}, 3, 0.5);
  ASSERT_EQ(r.lines.size(), 4u);
  EXPECT_EQ(r.lines[0].count, 1);
  EXPECT_TRUE(r.lines[1].identically_zero);
  EXPECT_FALSE(r.lines[1].count.has_value());
  EXPECT_EQ(r.lines[2].count, 1);
  EXPECT_EQ(r.lines[3].count, 1);
  EXPECT_GE(r.total_hits(), 4);
}

TEST(GraphIntersections, ZeroOnTheCirclePerturbsRadius) {
  const auto r = graph_intersections(Polynomial{0.1, 1.0}, 0, 0.9);
  EXPECT_NE(r.radius, r.radius_requested);
  EXPECT_NEAR(r.radius, 0.9, 0.006);
}

TEST(MinimalBlockingK, Examples) {
  const auto zero = minimal_blocking_k(Polynomial{}, 0.9);
  EXPECT_EQ(zero.k0, 1);
  EXPECT_EQ(zero.winding, 1);
  const auto shifted = minimal_blocking_k(Polynomial{5.0, 1.0}, 0.9);
  EXPECT_NEAR(shifted.max_modulus, 5.9, 1e-6);
  EXPECT_EQ(shifted.k0, 8);
  const auto two = minimal_blocking_k(Polynomial{2.0}, 0.5);
  EXPECT_EQ(two.k0, 5);
  EXPECT_EQ(two.winding, 1);
}

TEST(MinimalBlockingK, RandomCorpusAlwaysIntersects) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 25; ++i) {
    std::vector<Complex> c;
    for (int k = 0; k <= i % 5; ++k) c.push_back(oracle::random_in_box(rng, 3.0));
    const Polynomial alpha(c);
    const auto cert = minimal_blocking_k(alpha, 0.9);
    EXPECT_GE(graph_intersections(alpha, cert.k0, 0.9).total_hits(), 1);
    for (int extra : {0, 1, 3, 7, 20}) {
      const int k = cert.k0 + extra;
      EXPECT_EQ(winding_on_circle([&](Complex z) { return static_cast<double>(k) * z - alpha(z); }, 0.0, 0.9), 1);
    }
  }
}

TEST(GraphIntersections, CountsAgreeWithRootLocation) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 15; ++i) {
    std::vector<Complex> c;
    for (int k = 0; k <= 1 + i % 4; ++k) c.push_back(oracle::random_in_box(rng, 3.0));
    const Polynomial alpha(c);
    std::vector<Complex> hyper{-1.0};
    for (Complex a : c) hyper.push_back(a);  // z alpha(z) - 1
    const auto roots = oracle::durand_kerner(hyper);
    for (double r : {0.5, 0.7, 0.9}) {
      const bool near = std::any_of(roots.begin(), roots.end(), [&](Complex z) { return std::abs(std::abs(z) - r) < 1e-3; });
      if (near) continue;
      const int expected = static_cast<int>(std::count_if(roots.begin(), roots.end(), [&](Complex z) { return std::abs(z) < r; }));
      EXPECT_EQ(graph_intersections(alpha, 0, r).hyperbola.count, expected);
    }
  }
}
