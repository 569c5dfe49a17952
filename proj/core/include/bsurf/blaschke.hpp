#pragma once

#include <vector>

#include "bsurf/polynomial.hpp"

namespace bsurf {

/// Finite Blaschke product phase * prod (z - a_i) / (1 - conj(a_i) z), |a_i| < 1.
class BlaschkeProduct {
 public:
  explicit BlaschkeProduct(std::vector<Complex> zeros, Complex phase = 1.0);

  const std::vector<Complex>& zeros() const noexcept { return zeros_; }
  Complex phase() const noexcept { return phase_; }
  int degree() const noexcept { return static_cast<int>(zeros_.size()); }

  Complex operator()(Complex z) const noexcept;
  Complex derivative(Complex z) const noexcept;

  /// phase * prod (z - a_i)
  Polynomial numerator() const;
  /// prod (1 - conj(a_i) z)
  Polynomial denominator() const;
  /// N' D - N D', the numerator of B' = (N' D - N D') / D^2.
  Polynomial derivative_numerator() const;

 private:
  std::vector<Complex> zeros_;
  Complex phase_;
};

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) noexcept;

/// Number of zeros, cross-checked against the winding number of B on |z| = 1.
/// Throws `DegreeMismatch` if the two disagree.
int blaschke_degree(const BlaschkeProduct& b);

inline constexpr double kHopfGuard = 1e-6;
inline constexpr double kCriticalDedup = 1e-8;

/// Zeros of B' in the open unit disc, with multiplicity, sorted.
/// Throws `CriticalPointNearBoundary` if any root of the derivative numerator has
/// modulus within kHopfGuard of 1.
std::vector<Complex> critical_points(const BlaschkeProduct& b);

/// B(critical_points(b)), deduplicated within kCriticalDedup. Requires degree >= 2.
std::vector<Complex> critical_values(const BlaschkeProduct& b);

/// Solutions of B(x) = z in the closed disc, with multiplicity (degree() of them).
std::vector<Complex> fiber(const BlaschkeProduct& b, Complex z);

/// Clusters points closer than `tol` and returns one representative per cluster
/// (the first in input order).
std::vector<Complex> distinct_points(const std::vector<Complex>& pts, double tol);

}  // namespace bsurf
