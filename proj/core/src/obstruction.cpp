#include "bsurf/obstruction.hpp"

#include <cmath>

#include "bsurf/error.hpp"
#include "bsurf/winding.hpp"

namespace bsurf {

int IntersectionReport::total_hits() const noexcept {
  int n = (hyperbola.hit() ? 1 : 0) + (line_one.hit() ? 1 : 0);
  for (const auto& l : lines) n += l.hit() ? 1 : 0;
  return n;
}

namespace {

std::vector<Polynomial> test_functions(const Polynomial& alpha, int k) {
  std::vector<Polynomial> fns;
  fns.push_back(Polynomial::monomial(1) * alpha - Polynomial::constant(1.0));
  fns.push_back(alpha - Polynomial::constant(1.0));
  for (int j = 0; j <= k; ++j) fns.push_back(Polynomial::monomial(1, j) - alpha);
  return fns;
}

ComponentCount count_zeros(const Polynomial& h, double r) {
  ComponentCount c;
  if (h.is_zero()) {
    c.identically_zero = true;
    return c;
  }
  c.count = winding_on_circle([&](Complex z) { return h(z); }, 0.0, r);
  return c;
}

}  // namespace

IntersectionReport graph_intersections(const Polynomial& alpha, int k, double r) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 0");
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "r must lie in (0, 1)");
  const auto fns = test_functions(alpha, k);
  for (int attempt = 0; attempt <= 5; ++attempt) {
    double radius = r + 1e-3 * attempt;
    if (radius >= 1.0) radius = r - 1e-3 * attempt;
    try {
      IntersectionReport rep;
      rep.k = k;
      rep.radius_requested = r;
      rep.radius = radius;
      rep.hyperbola = count_zeros(fns[0], radius);
      rep.line_one = count_zeros(fns[1], radius);
      for (int j = 0; j <= k; ++j)
        rep.lines.push_back(count_zeros(fns[static_cast<std::size_t>(j) + 2], radius));
      return rep;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ZeroOnCurve && e.code() != ErrorCode::Undersampled) throw;
    }
  }
  throw Error(ErrorCode::ZeroOnCircle, "a test function vanishes on every perturbed circle");
}

BlockingCertificate minimal_blocking_k(const Polynomial& alpha, double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "r must lie in (0, 1)");
  BlockingCertificate cert;
  cert.radius = r;
  const BoundaryLoop loop(0.0, r, +1, 4096);
  for (int j = 0; j < loop.samples(); ++j)
    cert.max_modulus = std::max(cert.max_modulus, std::abs(alpha(loop.point(j))));
  int k = static_cast<int>(std::ceil(cert.max_modulus / r)) + 1;
  for (;; ++k) {
    const Polynomial h = Polynomial::monomial(1, static_cast<double>(k)) - alpha;
    const int w = winding_on_circle([&](Complex z) { return h(z); }, 0.0, r);
    if (w == 1) {
      cert.k0 = k;
      cert.winding = w;
      return cert;
    }
    if (k > 1'000'000)
      throw Error(ErrorCode::WindingMismatch, "no k with winding 1 found for k z - alpha");
  }
}

}  // namespace bsurf
