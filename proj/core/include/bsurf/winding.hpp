#pragma once

#include <functional>
#include <span>
#include <vector>

#include "bsurf/polynomial.hpp"

namespace bsurf {

inline constexpr double kZeroTolerance = 1e-12;
inline constexpr int kDefaultLoopSamples = 512;

/// Winding number of a closed sampled curve about the origin.
///
/// Sums principal-branch argument increments arg(v[j+1] / v[j]) including the
/// closing step. Every increment must lie strictly inside (-pi/2, pi/2).
/// Throws `ZeroOnCurve` if some |v| < kZeroTolerance and `Undersampled` if an
/// increment violates the step guard.
int winding_number(std::span<const Complex> values);

/// Winding of `fn` along a circle sampled with `samples` points, doubling the
/// sampling on `Undersampled` up to `max_samples`.
int winding_on_circle(const std::function<Complex(Complex)>& fn, Complex center, double radius,
                      int samples = kDefaultLoopSamples, int max_samples = 1 << 15);

/// An equispaced sampled circle traversed counterclockwise (+1) or clockwise (-1).
class BoundaryLoop {
 public:
  BoundaryLoop(Complex center, double radius, int orientation, int samples);

  Complex center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  int orientation() const noexcept { return orientation_; }
  int samples() const noexcept { return samples_; }

  /// center + radius * exp(orientation * 2 pi i j / samples).
  Complex point(int j) const noexcept;
  std::vector<Complex> points() const;
  BoundaryLoop resampled(int samples) const { return {center_, radius_, orientation_, samples}; }

 private:
  Complex center_;
  double radius_;
  int orientation_;
  int samples_;
};

enum class DomainKind { Disc, Annulus };

/// Unit disc, or the annulus innerRadius < |z| < 1, with coherently oriented boundary loops.
class PlanarDomain {
 public:
  static PlanarDomain disc(int samples = kDefaultLoopSamples);
  static PlanarDomain annulus(double inner_radius, int samples = kDefaultLoopSamples);

  DomainKind kind() const noexcept { return kind_; }
  double inner_radius() const noexcept { return inner_radius_; }
  const std::vector<BoundaryLoop>& loops() const noexcept { return loops_; }
  int samples_per_loop() const noexcept { return loops_.front().samples(); }

  int genus() const noexcept { return 0; }
  int boundary_components() const noexcept { return static_cast<int>(loops_.size()); }

  PlanarDomain resampled(int samples) const;

 private:
  PlanarDomain(DomainKind kind, double inner_radius, std::vector<BoundaryLoop> loops)
      : kind_(kind), inner_radius_(inner_radius), loops_(std::move(loops)) {}

  DomainKind kind_;
  double inner_radius_;
  std::vector<BoundaryLoop> loops_;
};

/// Sum of per-loop winding numbers; `per_loop[i]` holds samples of the boundary
/// function at `domain.loops()[i].points()`, i.e. in the loop's own orientation.
int boundary_index(std::span<const std::vector<Complex>> per_loop, const PlanarDomain& domain);

int boundary_index(const std::function<Complex(std::size_t loop, Complex z)>& fn,
                   const PlanarDomain& domain);

}  // namespace bsurf
