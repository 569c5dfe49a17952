#include <gtest/gtest.h>

#include <bsurf/error.hpp>
#include <bsurf/winding.hpp>

#include "oracles.hpp"

using namespace bsurf;

namespace {

std::vector<Complex> sample(const std::function<Complex(Complex)>& fn, int n, double r = 1.0) {
  std::vector<Complex> v;
  for (int j = 0; j < n; ++j) v.push_back(fn(std::polar(r, 2.0 * std::numbers::pi * j / n)));
  return v;
}

}  // namespace

TEST(Winding, MonomialsOnTheUnitCircle) {
  for (int n = -3; n <= 5; ++n)
    EXPECT_EQ(winding_number(sample([n](Complex z) { return std::pow(z, n); }, 64)), n);
}

TEST(Winding, ConjugateWindsBackwards) {
  EXPECT_EQ(winding_number(sample([](Complex z) { return std::conj(z); }, 64)), -1);
}

TEST(Winding, MatchesArgumentIntegralOnRandomPolynomials) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Complex> c;
    for (int k = 0; k <= 1 + trial % 6; ++k) c.push_back(oracle::random_in_box(rng, 1.0));
    const double r = 0.55 + 0.01 * trial;
    const Polynomial p(c);
    int mine = 0;
    try {
      mine = winding_on_circle([&](Complex z) { return p(z); }, 0.0, r);
    } catch (const Error&) {
      continue;  // zero on the circle; the oracle would be meaningless too
    }
    EXPECT_EQ(mine, oracle::argument_integral(c, r));
  }
}

TEST(Winding, ZeroOnCurveIsReported) {
  std::vector<Complex> v{1.0, Complex(0, 1), 0.0, Complex(0, -1)};
  try {
    winding_number(v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroOnCurve);
  }
}

TEST(Winding, CoarseSamplingIsReported) {
  try {
    winding_number(sample([](Complex z) { return std::pow(z, 5); }, 8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Undersampled);
  }
}

TEST(Winding, CircleRefinesOnDemand) {
  EXPECT_EQ(winding_on_circle([](Complex z) { return std::pow(z, 40); }, 0.0, 1.0, 64), 40);
}

TEST(Winding, ShiftedCircle) {
  EXPECT_EQ(winding_on_circle([](Complex z) { return z - 2.0; }, 2.0, 0.5), 1);
  EXPECT_EQ(winding_on_circle([](Complex z) { return z; }, 2.0, 0.5), 0);
}

TEST(PlanarDomain, DiscAndAnnulusLoops) {
  const auto d = PlanarDomain::disc(32);
  EXPECT_EQ(d.boundary_components(), 1);
  EXPECT_EQ(d.loops()[0].orientation(), 1);
  const auto a = PlanarDomain::annulus(0.3, 32);
  ASSERT_EQ(a.boundary_components(), 2);
  EXPECT_EQ(a.loops()[1].orientation(), -1);
  EXPECT_NEAR(std::abs(a.loops()[1].point(5)), 0.3, 1e-15);
  EXPECT_EQ(a.resampled(64).samples_per_loop(), 64);
}

TEST(PlanarDomain, BoundaryIndexOfAnnulus) {
  const auto a = PlanarDomain::annulus(0.3, 256);
  EXPECT_EQ(boundary_index([](std::size_t, Complex z) { return z - 0.6; }, a), 1);
  EXPECT_EQ(boundary_index([](std::size_t, Complex z) { return z - 0.1; }, a), 0);
  EXPECT_EQ(boundary_index([](std::size_t, Complex z) { return 1.0 / z; }, a), 0);
  EXPECT_EQ(boundary_index([](std::size_t l, Complex z) { return l == 0 ? z * z : Complex(1.0); }, a), 2);
}

TEST(PlanarDomain, RejectsBadRadius) {
  EXPECT_THROW(PlanarDomain::annulus(0.0), Error);
  EXPECT_THROW(PlanarDomain::annulus(1.0), Error);
}
