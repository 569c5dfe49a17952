#include "bsurf/winding.hpp"

#include <cmath>
#include <numbers>

#include "bsurf/error.hpp"

namespace bsurf {

int winding_number(std::span<const Complex> values) {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "winding_number of an empty loop");
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (std::abs(values[j]) < kZeroTolerance)
      throw Error(ErrorCode::ZeroOnCurve, "sample " + std::to_string(j) + " vanishes");
  }
  constexpr double kStepGuard = std::numbers::pi / 2.0;
  double total = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const Complex next = values[(j + 1) % values.size()];
    const double step = std::arg(next / values[j]);
    if (std::abs(step) >= kStepGuard)
      throw Error(ErrorCode::Undersampled,
                  "argument step " + std::to_string(step) + " at sample " + std::to_string(j));
    total += step;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

int winding_on_circle(const std::function<Complex(Complex)>& fn, Complex center, double radius,
                      int samples, int max_samples) {
  for (int n = samples;; n *= 2) {
    const BoundaryLoop loop(center, radius, +1, n);
    std::vector<Complex> values(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) values[static_cast<std::size_t>(j)] = fn(loop.point(j));
    try {
      return winding_number(values);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Undersampled || n * 2 > max_samples) throw;
    }
  }
}

BoundaryLoop::BoundaryLoop(Complex center, double radius, int orientation, int samples)
    : center_(center), radius_(radius), orientation_(orientation), samples_(samples) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "loop radius must be positive");
  if (orientation != 1 && orientation != -1)
    throw Error(ErrorCode::InvalidArgument, "loop orientation must be +1 or -1");
  if (samples < 16) throw Error(ErrorCode::InvalidArgument, "a boundary loop needs >= 16 samples");
}

Complex BoundaryLoop::point(int j) const noexcept {
  const double theta = orientation_ * 2.0 * std::numbers::pi * j / samples_;
  return center_ + radius_ * std::polar(1.0, theta);
}

std::vector<Complex> BoundaryLoop::points() const {
  std::vector<Complex> pts(static_cast<std::size_t>(samples_));
  for (int j = 0; j < samples_; ++j) pts[static_cast<std::size_t>(j)] = point(j);
  return pts;
}

PlanarDomain PlanarDomain::disc(int samples) {
  return PlanarDomain(DomainKind::Disc, 0.0, {BoundaryLoop(0.0, 1.0, +1, samples)});
}

PlanarDomain PlanarDomain::annulus(double inner_radius, int samples) {
  if (!(inner_radius > 0.0 && inner_radius < 1.0))
    throw Error(ErrorCode::InvalidArgument, "annulus inner radius must lie in (0, 1)");
  return PlanarDomain(DomainKind::Annulus, inner_radius,
                      {BoundaryLoop(0.0, 1.0, +1, samples),
                       BoundaryLoop(0.0, inner_radius, -1, samples)});
}

PlanarDomain PlanarDomain::resampled(int samples) const {
  return kind_ == DomainKind::Disc ? disc(samples) : annulus(inner_radius_, samples);
}

int boundary_index(std::span<const std::vector<Complex>> per_loop, const PlanarDomain& domain) {
  if (per_loop.size() != domain.loops().size())
    throw Error(ErrorCode::InvalidArgument, "boundary_index: one sample list per loop expected");
  int total = 0;
  for (std::size_t i = 0; i < per_loop.size(); ++i) {
    if (per_loop[i].size() != static_cast<std::size_t>(domain.loops()[i].samples()))
      throw Error(ErrorCode::InvalidArgument, "boundary_index: sample count mismatch on loop " +
                                                  std::to_string(i));
    total += winding_number(per_loop[i]);
  }
  return total;
}

int boundary_index(const std::function<Complex(std::size_t, Complex)>& fn,
                   const PlanarDomain& domain) {
  std::vector<std::vector<Complex>> per_loop;
  for (std::size_t i = 0; i < domain.loops().size(); ++i) {
    auto pts = domain.loops()[i].points();
    for (Complex& z : pts) z = fn(i, z);
    per_loop.push_back(std::move(pts));
  }
  return boundary_index(per_loop, domain);
}

}  // namespace bsurf
