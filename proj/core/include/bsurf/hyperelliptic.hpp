#pragma once

#include <cstdint>
#include <vector>

#include "bsurf/polynomial.hpp"

namespace bsurf {

/// Bordered hyperelliptic surface {(x, y) : y^2 = prod (x - a_j)(1 - conj(a_j) x), |x| <= 1}.
///
/// The number of branch points is hat_genus() + 1, where hat_genus() is the genus
/// of the double.
class HyperellipticCurve {
 public:
  /// Throws `DegenerateCurve` unless the branch points lie in the open disc and
  /// are pairwise further apart than kBranchSeparation.
  explicit HyperellipticCurve(std::vector<Complex> branch_points);

  static constexpr double kBranchSeparation = 1e-8;

  const std::vector<Complex>& branch_points() const noexcept { return branch_points_; }
  int hat_genus() const noexcept { return static_cast<int>(branch_points_.size()) - 1; }
  int boundary_components() const noexcept { return hat_genus() % 2 == 0 ? 1 : 2; }
  int genus() const noexcept { return (hat_genus() - boundary_components() + 1) / 2; }

 private:
  std::vector<Complex> branch_points_;
};

/// prod (x - a_j)(1 - conj(a_j) x)
Complex curve_rhs(const HyperellipticCurve& curve, Complex x) noexcept;

/// prod (1 - conj(a_j) x)
Complex reflection_product(const HyperellipticCurve& curve, Complex x) noexcept;

struct SurfacePoint {
  Complex x;
  Complex y;
};

struct Topology {
  int genus = 0;
  int boundary_components = 0;
  /// Winding of curve_rhs around |x| = 1; equals hat_genus + 1.
  int rhs_winding = 0;
  /// Number of closed lifts of |x| = 1 found by continuing y along the circle.
  int lift_count = 0;
};

/// Throws `WindingMismatch` if the computed winding differs from hat_genus + 1
/// or the lift count disagrees with the parity rule.
Topology topology(const HyperellipticCurve& curve, int samples = 512);

/// Closed lifts of the unit circle to the surface. A lift starts at x = 1 with the
/// principal square root and follows y by nearest-neighbour continuation; a lift
/// covering the circle twice is returned as one loop of 2 * samples points.
std::vector<std::vector<SurfacePoint>> boundary_lifts(const HyperellipticCurve& curve,
                                                      int samples = 512);

struct InnerPair {
  Complex f;
  Complex g;
};

/// (y / prod (1 - conj(a_j) x), x). Throws `InvalidArgument` if p is not on the
/// curve to 1e-9 relative.
InnerPair inner_pair(const HyperellipticCurve& curve, const SurfacePoint& p);

/// |f^2 - prod (g - a_j)/(1 - conj(a_j) g)| relative to max(1, |f|^2).
double square_identity_residual(const HyperellipticCurve& curve, const SurfacePoint& p);

struct ClassFReport {
  int hat_genus = 0;
  int genus = 0;
  int boundary_components = 0;
  int lift_count = 0;
  /// Total winding of f along the boundary lifts.
  int deg_f = 0;
  /// 2g + m - 1, the lower bound deg_f must meet.
  int degree_bound = 0;
  bool degree_condition = false;
  double max_boundary_deviation = 0.0;
  double max_square_identity_residual = 0.0;
  double min_image_distance = 0.0;
  double min_immersion_norm = 0.0;
  int samples = 0;
  bool class_f = false;
};

/// Verifies that F = (f, x) is an injective immersion into the closed cylinder
/// with f inner of degree >= 2g + m - 1, by boundary winding and random sampling.
ClassFReport verify_class_F(const HyperellipticCurve& curve, int n_samples,
                            std::uint64_t seed = 0, int boundary_samples = 512);

}  // namespace bsurf
