#include "bsurf/blaschke.hpp"

#include <algorithm>
#include <cmath>

#include "bsurf/error.hpp"
#include "bsurf/winding.hpp"

namespace bsurf {

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros, Complex phase)
    : zeros_(std::move(zeros)), phase_(phase) {
  if (zeros_.empty()) throw Error(ErrorCode::InvalidArgument, "a Blaschke product needs >= 1 zero");
  for (Complex a : zeros_)
    if (!(std::abs(a) < 1.0))
      throw Error(ErrorCode::InvalidArgument, "Blaschke zeros must lie in the open unit disc");
  if (std::abs(std::abs(phase_) - 1.0) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "Blaschke phase must be unimodular");
}

Complex BlaschkeProduct::operator()(Complex z) const noexcept {
  Complex v = phase_;
  for (Complex a : zeros_) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

Complex BlaschkeProduct::derivative(Complex z) const noexcept {
  const std::size_t d = zeros_.size();
  std::vector<Complex> factor(d), dfactor(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Complex a = zeros_[i];
    const Complex den = 1.0 - std::conj(a) * z;
    factor[i] = (z - a) / den;
    dfactor[i] = (1.0 - std::norm(a)) / (den * den);
  }
  Complex sum{};
  for (std::size_t i = 0; i < d; ++i) {
    Complex term = dfactor[i];
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) term *= factor[j];
    sum += term;
  }
  return phase_ * sum;
}

Polynomial BlaschkeProduct::numerator() const { return Polynomial::from_roots(zeros_, phase_); }

Polynomial BlaschkeProduct::denominator() const {
  Polynomial d = Polynomial::constant(1.0);
  for (Complex a : zeros_) d = d * Polynomial{1.0, -std::conj(a)};
  return d;
}

Polynomial BlaschkeProduct::derivative_numerator() const {
  const Polynomial n = numerator();
  const Polynomial d = denominator();
  return n.derivative() * d - n * d.derivative();
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) noexcept { return b(z); }

int blaschke_degree(const BlaschkeProduct& b) {
  const int winding = winding_on_circle([&](Complex z) { return b(z); }, 0.0, 1.0);
  if (winding != b.degree())
    throw Error(ErrorCode::DegreeMismatch, "zero count " + std::to_string(b.degree()) +
                                               " but boundary winding " + std::to_string(winding));
  return b.degree();
}

std::vector<Complex> critical_points(const BlaschkeProduct& b) {
  const Polynomial p = b.derivative_numerator();
  if (p.degree() < 1) return {};
  std::vector<Complex> inside;
  for (Complex c : poly_roots(p)) {
    const double r = std::abs(c);
    if (std::abs(r - 1.0) <= kHopfGuard)
      throw Error(ErrorCode::CriticalPointNearBoundary,
                  "critical point at modulus " + std::to_string(r));
    if (r < 1.0) inside.push_back(c);
  }
  return inside;
}

std::vector<Complex> critical_values(const BlaschkeProduct& b) {
  if (b.degree() < 2)
    throw Error(ErrorCode::InvalidArgument, "critical_values needs a Blaschke product of degree >= 2");
  std::vector<Complex> values;
  for (Complex c : critical_points(b)) {
    const Complex v = b(c);
    const bool seen = std::any_of(values.begin(), values.end(),
                                  [&](Complex w) { return std::abs(w - v) <= kCriticalDedup; });
    if (!seen) values.push_back(v);
  }
  return values;
}

std::vector<Complex> fiber(const BlaschkeProduct& b, Complex z) {
  if (std::abs(z) > 1.0 + 1e-12)
    throw Error(ErrorCode::InvalidArgument, "fiber: base point outside the closed disc");
  const Polynomial eq = b.numerator() - b.denominator() * z;
  std::vector<Complex> roots = poly_roots(eq);
  // Newton on the rational form tightens simple roots that sit near a cluster.
  for (Complex& x : roots) {
    for (int it = 0; it < 3; ++it) {
      const Complex d = b.derivative(x);
      if (std::abs(d) < 1e-6) break;
      const Complex cand = x - (b(x) - z) / d;
      if (!(std::abs(b(cand) - z) < std::abs(b(x) - z))) break;
      x = cand;
    }
  }
  return roots;
}

std::vector<Complex> distinct_points(const std::vector<Complex>& pts, double tol) {
  std::vector<Complex> out;
  for (Complex p : pts) {
    const bool seen =
        std::any_of(out.begin(), out.end(), [&](Complex q) { return std::abs(p - q) <= tol; });
    if (!seen) out.push_back(p);
  }
  return out;
}

}  // namespace bsurf
