#pragma once

#include <optional>
#include <vector>

#include "bsurf/polynomial.hpp"

namespace bsurf {

/// Zero count of one test function inside rU; `count` is empty when the test
/// function is identically zero (the graph lies inside that component).
struct ComponentCount {
  std::optional<int> count;
  bool identically_zero = false;

  bool hit() const noexcept { return identically_zero || (count && *count > 0); }
};

/// Intersections of the graph of alpha over rU with the curves of the family
/// zw = 1, w = 1, w = jz (0 <= j <= k).
struct IntersectionReport {
  int k = 0;
  double radius_requested = 0.0;
  /// Radius actually used after perturbing away from zeros on the circle.
  double radius = 0.0;
  ComponentCount hyperbola;
  ComponentCount line_one;
  /// lines[j] belongs to w = j z.
  std::vector<ComponentCount> lines;

  int total_hits() const noexcept;
};

/// Counts zeros inside |z| < r of z alpha(z) - 1, alpha(z) - 1 and j z - alpha(z)
/// by winding numbers on |z| = r. On a zero on the circle r is moved by 1e-3 (up
/// to 5 times) before `ZeroOnCircle` is thrown.
IntersectionReport graph_intersections(const Polynomial& alpha, int k, double r = 0.9);

struct BlockingCertificate {
  int k0 = 0;
  double radius = 0.0;
  /// max |alpha| over |z| = r (dense sampling).
  double max_modulus = 0.0;
  /// Winding of k0 z - alpha(z) on |z| = r; 1 by the comparison with k0 z.
  int winding = 0;
};

/// Smallest k >= ceil(max|alpha| / r) + 1 with winding(k z - alpha) = 1 on |z| = r.
BlockingCertificate minimal_blocking_k(const Polynomial& alpha, double r = 0.9);

}  // namespace bsurf
