#include <gtest/gtest.h>

#include <bsurf/blaschke.hpp>
#include <bsurf/error.hpp>

#include "oracles.hpp"

using namespace bsurf;

TEST(Blaschke, MatchesProductFormula) {
  const std::vector<Complex> zeros{Complex(0.3, 0.2), -0.5, Complex(0, 0.7)};
  const BlaschkeProduct b(zeros, Complex(0, 1));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Complex z = oracle::random_in_disc(rng, 1.0);
    EXPECT_LT(std::abs(b(z) - Complex(0, 1) * oracle::blaschke(zeros, z)), 1e-14);
    EXPECT_LT(std::abs(blaschke_eval(b, z) - b(z)), 1e-15);
  }
}

TEST(Blaschke, UnimodularOnTheCircle) {
  const BlaschkeProduct b({Complex(0.6, -0.1), Complex(-0.2, 0.5)});
  for (int j = 0; j < 100; ++j) EXPECT_NEAR(std::abs(b(std::polar(1.0, 0.0628 * j))), 1.0, 1e-14);
}

TEST(Blaschke, DerivativeAndRationalParts) {
  const BlaschkeProduct b({Complex(0.3, 0.2), -0.5}, std::polar(1.0, 0.4));
  const Complex z(0.2, -0.35), h(1e-6, 0);
  EXPECT_LT(std::abs(b.derivative(z) - (b(z + h) - b(z - h)) / (2.0 * h)), 1e-8);
  EXPECT_LT(std::abs(b.numerator()(z) / b.denominator()(z) - b(z)), 1e-14);
  const Complex d = b.denominator()(z);
  EXPECT_LT(std::abs(b.derivative_numerator()(z) / (d * d) - b.derivative(z)), 1e-12);
}

TEST(Blaschke, RejectsInvalidInput) {
  EXPECT_THROW(BlaschkeProduct({}), Error);
  EXPECT_THROW(BlaschkeProduct({1.0}), Error);
  EXPECT_THROW(BlaschkeProduct({0.0}, 2.0), Error);
}

TEST(Blaschke, DegreeIsTheWindingNumber) {
  EXPECT_EQ(blaschke_degree(BlaschkeProduct({0.0, 0.5, Complex(0, -0.9)})), 3);
}

TEST(CriticalPoints, SquareMapHasOneAtTheOrigin) {
  const auto c = critical_points(BlaschkeProduct({0.0, 0.0}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_LT(std::abs(c[0]), 1e-12);
}

TEST(CriticalPoints, DegreeMinusOneInsideAndDerivativeVanishes) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> zeros;
    const int d = 2 + trial % 4;
    for (int i = 0; i < d; ++i) zeros.push_back(oracle::random_in_disc(rng, 0.8));
    const BlaschkeProduct b(zeros);
    const auto c = critical_points(b);
    EXPECT_EQ(static_cast<int>(c.size()), d - 1);
    for (Complex p : c) {
      EXPECT_LT(std::abs(p), 1.0);
      EXPECT_LT(std::abs(b.derivative(p)), 1e-8);
    }
  }
}

TEST(CriticalValues, SymmetricZerosShareOneValue) {
  const auto v = critical_values(BlaschkeProduct({0.5, -0.5}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_LT(std::abs(v[0] + 0.25), 1e-12);
}

TEST(CriticalValues, NeedDegreeTwo) { EXPECT_THROW(critical_values(BlaschkeProduct({0.3})), Error); }

TEST(Fiber, SolvesTheEquationWithMultiplicity) {
  const BlaschkeProduct b({Complex(0.1, 0.4), -0.3, Complex(0.5, -0.5)});
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    const Complex z = oracle::random_in_disc(rng, 1.0);
    const auto pts = fiber(b, z);
    ASSERT_EQ(pts.size(), 3u);
    for (Complex x : pts) {
      EXPECT_LT(std::abs(b(x) - z), 1e-12);
      EXPECT_LE(std::abs(x), 1.0 + 1e-12);
    }
  }
}

TEST(Fiber, BoundaryValuesPullBackToTheCircle) {
  const BlaschkeProduct b({Complex(0.1, 0.4), -0.3});
  for (Complex x : fiber(b, std::polar(1.0, 1.0))) EXPECT_NEAR(std::abs(x), 1.0, 1e-12);
}

TEST(Fiber, RejectsPointsOutsideTheDisc) { EXPECT_THROW(fiber(BlaschkeProduct({0.0}), 1.5), Error); }

TEST(DistinctPoints, ClustersWithinTolerance) {
  const auto d = distinct_points({0.0, 1e-9, 1.0, 1.0 + 1e-9, 2.0}, 1e-7);
  EXPECT_EQ(d.size(), 3u);
}
