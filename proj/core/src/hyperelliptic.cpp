#include "bsurf/hyperelliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bsurf/error.hpp"
#include "bsurf/winding.hpp"

namespace bsurf {

HyperellipticCurve::HyperellipticCurve(std::vector<Complex> branch_points)
    : branch_points_(std::move(branch_points)) {
  if (branch_points_.empty())
    throw Error(ErrorCode::DegenerateCurve, "at least one branch point is required");
  for (std::size_t i = 0; i < branch_points_.size(); ++i) {
    if (!(std::abs(branch_points_[i]) < 1.0))
      throw Error(ErrorCode::DegenerateCurve, "branch points must lie in the open unit disc");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(branch_points_[i] - branch_points_[j]) <= kBranchSeparation)
        throw Error(ErrorCode::DegenerateCurve,
                    "branch points " + std::to_string(j) + " and " + std::to_string(i) +
                        " coincide");
  }
}

Complex curve_rhs(const HyperellipticCurve& curve, Complex x) noexcept {
  Complex v = 1.0;
  for (Complex a : curve.branch_points()) v *= (x - a) * (1.0 - std::conj(a) * x);
  return v;
}

Complex reflection_product(const HyperellipticCurve& curve, Complex x) noexcept {
  Complex v = 1.0;
  for (Complex a : curve.branch_points()) v *= 1.0 - std::conj(a) * x;
  return v;
}

namespace {

Complex unit_point(int j, int samples) {
  return std::polar(1.0, 2.0 * std::numbers::pi * j / samples);
}

// Continues y from `prev` to the square root of rhs(x) nearest to it. The two
// candidates are +-s; the step is unambiguous when |prev - s| is well below |prev + s|.
Complex continue_root(Complex prev, Complex rhs) {
  Complex s = std::sqrt(rhs);
  if (std::abs(prev + s) < std::abs(prev - s)) s = -s;
  if (!(std::abs(prev - s) < 0.5 * std::abs(prev + s)))
    throw Error(ErrorCode::Undersampled, "sheet continuation step is ambiguous");
  return s;
}

}  // namespace

std::vector<std::vector<SurfacePoint>> boundary_lifts(const HyperellipticCurve& curve,
                                                      int samples) {
  if (samples < 16) throw Error(ErrorCode::InvalidArgument, "boundary_lifts needs >= 16 samples");
  std::vector<SurfacePoint> path;
  path.reserve(static_cast<std::size_t>(2 * samples));
  Complex y = std::sqrt(curve_rhs(curve, 1.0));
  const Complex y_start = y;
  path.push_back({1.0, y});
  for (int j = 1; j <= samples; ++j) {
    const Complex x = unit_point(j % samples, samples);
    y = continue_root(y, curve_rhs(curve, x));
    if (j < samples) path.push_back({x, y});
  }
  // After one turn y is back to +y_start (two closed lifts) or -y_start (one lift of length 2n).
  const bool closes = std::abs(y - y_start) < std::abs(y + y_start);
  if (closes) {
    std::vector<SurfacePoint> other(path);
    for (auto& p : other) p.y = -p.y;
    return {path, other};
  }
  std::vector<SurfacePoint> doubled(path);
  for (const auto& p : path) doubled.push_back({p.x, -p.y});
  return {doubled};
}

Topology topology(const HyperellipticCurve& curve, int samples) {
  Topology t;
  const int expected = curve.hat_genus() + 1;
  t.rhs_winding = winding_on_circle([&](Complex x) { return curve_rhs(curve, x); }, 0.0, 1.0,
                                    samples);
  if (t.rhs_winding != expected)
    throw Error(ErrorCode::WindingMismatch, "rhs winding " + std::to_string(t.rhs_winding) +
                                                " != " + std::to_string(expected));
  t.boundary_components = t.rhs_winding % 2 == 0 ? 2 : 1;
  t.genus = (curve.hat_genus() - t.boundary_components + 1) / 2;
  t.lift_count = static_cast<int>(boundary_lifts(curve, samples).size());
  if (t.lift_count != t.boundary_components)
    throw Error(ErrorCode::WindingMismatch, "found " + std::to_string(t.lift_count) +
                                                " boundary lifts, parity predicts " +
                                                std::to_string(t.boundary_components));
  return t;
}

InnerPair inner_pair(const HyperellipticCurve& curve, const SurfacePoint& p) {
  const Complex rhs = curve_rhs(curve, p.x);
  if (std::abs(p.y * p.y - rhs) > 1e-9 * std::max(1.0, std::abs(rhs)))
    throw Error(ErrorCode::InvalidArgument, "point is not on the curve");
  return {p.y / reflection_product(curve, p.x), p.x};
}

double square_identity_residual(const HyperellipticCurve& curve, const SurfacePoint& p) {
  const auto [f, g] = inner_pair(curve, p);
  Complex prod = 1.0;
  for (Complex a : curve.branch_points()) prod *= (g - a) / (1.0 - std::conj(a) * g);
  return std::abs(f * f - prod) / std::max(1.0, std::norm(f));
}

namespace {

// df/dx along a sheet away from branch points: f = y / Q, y' = rhs' / (2y).
Complex df_dx(const HyperellipticCurve& curve, const SurfacePoint& p) {
  Complex q = 1.0, dq_over_q = 0.0, drhs_over_rhs = 0.0;
  for (Complex a : curve.branch_points()) {
    const Complex refl = 1.0 - std::conj(a) * p.x;
    q *= refl;
    dq_over_q += -std::conj(a) / refl;
    drhs_over_rhs += 1.0 / (p.x - a) - std::conj(a) / refl;
  }
  const Complex f = p.y / q;
  return f * (0.5 * drhs_over_rhs - dq_over_q);
}

}  // namespace

ClassFReport verify_class_F(const HyperellipticCurve& curve, int n_samples, std::uint64_t seed,
                            int boundary_samples) {
  if (n_samples < 100) throw Error(ErrorCode::InvalidArgument, "verify_class_F needs >= 100 samples");
  ClassFReport r;
  const Topology topo = topology(curve, boundary_samples);
  r.hat_genus = curve.hat_genus();
  r.genus = topo.genus;
  r.boundary_components = topo.boundary_components;
  r.lift_count = topo.lift_count;
  r.samples = n_samples;

  // (a) degree by boundary winding of f, (b) boundary modulus.
  for (const auto& lift : boundary_lifts(curve, boundary_samples)) {
    std::vector<Complex> fv;
    fv.reserve(lift.size());
    for (const auto& p : lift) {
      const Complex f = inner_pair(curve, p).f;
      fv.push_back(f);
      r.max_boundary_deviation = std::max(r.max_boundary_deviation, std::abs(std::abs(f) - 1.0));
      r.max_square_identity_residual =
          std::max(r.max_square_identity_residual, square_identity_residual(curve, p));
    }
    r.deg_f += winding_number(fv);
  }
  r.degree_bound = 2 * r.genus + r.boundary_components - 1;
  r.degree_condition = r.deg_f == curve.hat_genus() + 1 && r.deg_f >= r.degree_bound;

  // (c), (d) on random interior points.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<SurfacePoint> pts;
  pts.reserve(static_cast<std::size_t>(n_samples));
  while (static_cast<int>(pts.size()) < n_samples) {
    const double rad = std::sqrt(unit(rng));
    const double th = 2.0 * std::numbers::pi * unit(rng);
    const Complex x = std::polar(rad, th);
    Complex y = std::sqrt(curve_rhs(curve, x));
    if (unit(rng) < 0.5) y = -y;
    pts.push_back({x, y});
  }

  auto image = [&](const SurfacePoint& p) { return inner_pair(curve, p); };
  auto distance = [](InnerPair a, InnerPair b) {
    return std::sqrt(std::norm(a.f - b.f) + std::norm(a.g - b.g));
  };

  double min_dist = std::numeric_limits<double>::infinity();
  double min_imm = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const SurfacePoint& p = pts[i];
    const SurfacePoint& q = pts[(i + 1) % pts.size()];
    const SurfacePoint flipped{p.x, -p.y};
    const InnerPair fp = image(p);
    if (std::abs(p.x - q.x) > 0.0 || std::abs(p.y - q.y) > 0.0)
      min_dist = std::min(min_dist, distance(fp, image(q)));
    if (std::abs(p.y) > 0.0) min_dist = std::min(min_dist, distance(fp, image(flipped)));
    min_imm = std::min(min_imm, std::hypot(std::abs(df_dx(curve, p)), 1.0));
  }
  // At a branch point x = a + t^2 is the local chart and dF/dt = (df/dt, 0) with
  // df/dt = sqrt(h(a)) / Q(a), h = rhs / (x - a).
  for (Complex a : curve.branch_points()) {
    Complex h = (1.0 - std::conj(a) * a);
    for (Complex b : curve.branch_points())
      if (b != a) h *= (a - b) * (1.0 - std::conj(b) * a);
    min_imm = std::min(min_imm, std::abs(std::sqrt(h) / reflection_product(curve, a)));
  }
  r.min_image_distance = min_dist;
  r.min_immersion_norm = min_imm;
  r.class_f = r.degree_condition && r.max_boundary_deviation < 1e-9 && r.min_image_distance > 0.0 &&
              r.min_immersion_norm > 0.0;
  return r;
}

}  // namespace bsurf
