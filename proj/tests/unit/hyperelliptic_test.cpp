#include <gtest/gtest.h>

#include <bsurf/error.hpp>
#include <bsurf/hyperelliptic.hpp>

#include "oracles.hpp"

using namespace bsurf;

namespace {

std::vector<Complex> rhs_coefficients(const std::vector<Complex>& branch) {
  Polynomial p = Polynomial::constant(1.0);
  for (Complex a : branch) p = p * Polynomial{-a, 1.0} * Polynomial{1.0, -std::conj(a)};
  return p.coeffs();
}

}  // namespace

TEST(Hyperelliptic, TorusWithOneHole) {
  const HyperellipticCurve c({0.3, -0.4, Complex(0, 0.5)});
  const auto rep = verify_class_F(c, 200, 1);
  EXPECT_EQ(rep.hat_genus, 2);
  EXPECT_EQ(rep.genus, 1);
  EXPECT_EQ(rep.boundary_components, 1);
  EXPECT_EQ(rep.deg_f, 3);
  EXPECT_TRUE(rep.class_f);
}

TEST(Hyperelliptic, RejectsDegenerateBranchData) {
  for (auto pts : std::vector<std::vector<Complex>>{{}, {1.0}, {0.2, 0.2}, {Complex(0, 1.2)}}) {
    try {
      HyperellipticCurve c(pts);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegenerateCurve);
    }
  }
}

TEST(Hyperelliptic, RhsWindingMatchesArgumentIntegral) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 5; ++n) {
    std::vector<Complex> branch;
    for (int i = 0; i < n; ++i) branch.push_back(oracle::random_in_disc(rng, 0.8));
    const HyperellipticCurve c(branch);
    const auto t = topology(c);
    EXPECT_EQ(t.rhs_winding, oracle::argument_integral(rhs_coefficients(branch), 1.0));
    EXPECT_EQ(t.rhs_winding, n);
  }
}

TEST(Hyperelliptic, TopologyAndLiftsAreConsistent) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<Complex> branch;
    for (int i = 0; i < n; ++i) branch.push_back(oracle::random_in_disc(rng, 0.8));
    const HyperellipticCurve c(branch);
    const auto t = topology(c);
    EXPECT_EQ(c.hat_genus(), 2 * t.genus + t.boundary_components - 1);
    EXPECT_EQ(t.lift_count, t.boundary_components);
    EXPECT_EQ(t.boundary_components, n % 2 == 0 ? 2 : 1);
    const auto lifts = boundary_lifts(c, 512);
    std::size_t total = 0;
    for (const auto& l : lifts) total += l.size();
    EXPECT_EQ(total, 1024u);
  }
}

TEST(Hyperelliptic, InnerPairIsInnerAndSatisfiesSquareIdentity) {
  const HyperellipticCurve c({Complex(0.2, 0.1), -0.6, Complex(0.1, -0.7), 0.5});
  for (const auto& lift : boundary_lifts(c, 512))
    for (const auto& p : lift) {
      EXPECT_NEAR(std::abs(inner_pair(c, p).f), 1.0, 1e-9);
      EXPECT_LT(square_identity_residual(c, p), 1e-9);
    }
}

TEST(Hyperelliptic, SheetFlipNegatesF) {
  const HyperellipticCurve c({0.3, -0.4, Complex(0, 0.5)});
  const Complex x(0.2, 0.3);
  const Complex y = std::sqrt(curve_rhs(c, x));
  EXPECT_LT(std::abs(inner_pair(c, {x, y}).f + inner_pair(c, {x, -y}).f), 1e-15);
}

TEST(Hyperelliptic, RejectsPointsOffTheCurve) {
  const HyperellipticCurve c({0.3});
  EXPECT_THROW(inner_pair(c, {0.1, 5.0}), Error);
}

TEST(Hyperelliptic, ClassFReportIsSeedDeterministic) {
  const HyperellipticCurve c({0.3, -0.4, Complex(0, 0.5), Complex(0.1, -0.6)});
  const auto a = verify_class_F(c, 150, 9), b = verify_class_F(c, 150, 9);
  EXPECT_EQ(a.min_image_distance, b.min_image_distance);
  EXPECT_EQ(a.deg_f, 4);
  EXPECT_EQ(a.genus, 1);
  EXPECT_EQ(a.boundary_components, 2);
  EXPECT_TRUE(a.degree_condition);
}
