#include "bsurf/deform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bsurf/parallel.hpp"

namespace bsurf {

double DefectFunctional::operator()(Complex z, Complex w) const noexcept {
  const double base = std::norm(z) - 1.0;
  switch (family) {
    case RhoFamily::Radial:
      return base + epsilon;
    case RhoFamily::WCoupled:
      return base + epsilon * w.real();
    case RhoFamily::Mixed:
      return base + epsilon * (z * std::conj(w)).real();
  }
  return base;
}

Complex DefectFunctional::dzbar(Complex z, Complex w) const noexcept {
  if (family == RhoFamily::Mixed) return z + 0.5 * epsilon * w;
  return z;
}

Complex DefectFunctional::dz(Complex z, Complex w) const noexcept {
  return std::conj(dzbar(z, w));
}

BoundaryMapState::BoundaryMapState(BlaschkeProduct f0, Polynomial g0, Polynomial correction)
    : f0_(std::move(f0)), g0_(std::move(g0)), correction_(std::move(correction)) {}

Complex BoundaryMapState::df(Complex x) const noexcept {
  return f0_.derivative(x) + correction_.derivative()(x);
}

double BoundaryMapState::boundary_sup(int samples) const {
  const BoundaryLoop loop(0.0, 1.0, 1, samples);
  double m = 0.0;
  for (int j = 0; j < samples; ++j) m = std::max(m, std::abs(f(loop.point(j))));
  return m;
}

std::vector<Complex> linearized_coefficient(const DefectFunctional& rho,
                                            const BoundaryMapState& state,
                                            const BoundaryLoop& loop) {
  std::vector<Complex> a(static_cast<std::size_t>(loop.samples()));
  for (int j = 0; j < loop.samples(); ++j) {
    const Complex x = loop.point(j);
    const Complex v = 2.0 * rho.dzbar(state.f(x), state.g(x));
    if (std::abs(v) < kVanishingCoefficient)
      throw Error(ErrorCode::VanishingCoefficient,
                  "linearized coefficient vanishes at sample " + std::to_string(j));
    a[static_cast<std::size_t>(j)] = v;
  }
  return a;
}

double boundary_residual(const DefectFunctional& rho, const BoundaryMapState& state, int samples) {
  const BoundaryLoop loop(0.0, 1.0, 1, samples);
  double r = 0.0;
  for (int j = 0; j < samples; ++j) {
    const Complex x = loop.point(j);
    r = std::max(r, std::abs(rho(state.f(x), state.g(x))));
  }
  return r;
}

namespace {

RHSolution newton_step(const DefectFunctional& rho, const BoundaryMapState& state,
                       const NewtonOptions& opt) {
  RHProblem p{PlanarDomain::disc(opt.samples), {}, {}};
  const BoundaryLoop& loop = p.domain.loops().front();
  p.a.push_back(linearized_coefficient(rho, state, loop));
  std::vector<double> c(static_cast<std::size_t>(opt.samples));
  for (int j = 0; j < opt.samples; ++j) {
    const Complex x = loop.point(j);
    c[static_cast<std::size_t>(j)] = -rho(state.f(x), state.g(x));
  }
  p.c.push_back(std::move(c));
  return rh_solve(p, opt.modes, opt.svd_tol);
}

std::string format_trace(const std::vector<double>& trace) {
  std::string s;
  for (double r : trace) {
    if (!s.empty()) s += ", ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", r);
    s += buf;
  }
  return s;
}

}  // namespace

ContinuationResult newton_continue(const DefectFunctional& rho, const BlaschkeProduct& f0,
                                   const Polynomial& g0, const NewtonOptions& opt) {
  ContinuationResult out{BoundaryMapState(f0, g0), {}, {}, 0, 0};
  double residual = boundary_residual(rho, out.state, opt.samples);
  out.trace.push_back(residual);
  if (residual < opt.tol) return out;

  for (int it = 1; it <= opt.max_iter; ++it) {
    const RHSolution step = newton_step(rho, out.state, opt);
    if (it == 1) out.kernel_dimension = step.kernel_dimension();
    const Polynomial k(step.particular);

    double scale = 1.0;
    int halvings = 0;
    BoundaryMapState trial = out.state.with_correction(out.state.correction() + k);
    double trial_residual = boundary_residual(rho, trial, opt.samples);
    while (trial_residual > residual && halvings < 4) {
      scale *= 0.5;
      ++halvings;
      trial = out.state.with_correction(out.state.correction() + k * scale);
      trial_residual = boundary_residual(rho, trial, opt.samples);
    }
    if (!(trial.boundary_sup(opt.samples) < kStateBound)) {
      out.trace.push_back(trial_residual);
      throw NoConvergenceError("iterate left sup|f| < 2; residuals " + format_trace(out.trace),
                               out.trace);
    }
    out.state = std::move(trial);
    residual = trial_residual;
    out.trace.push_back(residual);
    out.halvings.push_back(halvings);
    out.iterations = it;
    if (residual < opt.tol) return out;
  }
  throw NoConvergenceError("no convergence in " + std::to_string(opt.max_iter) +
                               " iterations; residuals " + format_trace(out.trace),
                           out.trace);
}

HypersurfaceReport verify_on_hypersurface(const BoundaryMapState& state,
                                          const DefectFunctional& rho, int finer_factor,
                                          const NewtonOptions& opt, std::uint64_t seed) {
  if (finer_factor < 1) throw Error(ErrorCode::InvalidArgument, "finer factor must be >= 1");
  HypersurfaceReport rep;
  rep.boundary_samples = opt.samples * finer_factor;
  rep.out_of_sample_residual = boundary_residual(rho, state, rep.boundary_samples);
  if (!(rep.out_of_sample_residual < 10.0 * opt.tol))
    throw Error(ErrorCode::OutOfSampleFailure,
                "boundary residual " + std::to_string(rep.out_of_sample_residual) + " at " +
                    std::to_string(rep.boundary_samples) + " samples");

  constexpr int kRadii = 20;
  constexpr int kAngles = 25;
  std::vector<double> interior(kRadii * kAngles);
  parallel_for(interior.size(), [&](std::size_t i) {
    const double r = 0.95 * static_cast<double>(i / kAngles + 1) / kRadii;
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i % kAngles) / kAngles;
    const Complex x = std::polar(r, t);
    interior[i] = rho(state.f(x), state.g(x));
  });
  rep.interior_samples = static_cast<int>(interior.size());
  rep.interior_max = *std::max_element(interior.begin(), interior.end());
  if (!(rep.interior_max < 0.0))
    throw Error(ErrorCode::InteriorEscape,
                "rho(F(x)) = " + std::to_string(rep.interior_max) + " at an interior sample");

  constexpr int kPairs = 2000;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto draw = [&] { return std::polar(std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng)); };
  std::vector<std::pair<Complex, Complex>> pairs(kPairs);
  for (auto& pr : pairs) {
    pr.first = draw();
    pr.second = draw();
  }
  std::vector<double> dist(kPairs), ratio(kPairs);
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto [x, y] = pairs[i];
    const double d = std::hypot(std::abs(state.f(x) - state.f(y)), std::abs(state.g(x) - state.g(y)));
    dist[i] = d;
    ratio[i] = d / std::max(std::abs(x - y), 1e-300);
  });
  rep.pairs = kPairs;
  rep.min_image_distance = *std::min_element(dist.begin(), dist.end());
  rep.min_image_ratio = *std::min_element(ratio.begin(), ratio.end());
  if (!(rep.min_image_distance > 0.0))
    throw Error(ErrorCode::InjectivityFailure, "two sampled points share an image");
  return rep;
}

ConvergenceScan convergence_radius(RhoFamily family, const BlaschkeProduct& f0, const Polynomial& g0,
                                   const NewtonOptions& opt, double start, double max_epsilon,
                                   int bisections) {
  if (!(start > 0.0) || !(max_epsilon >= start) || bisections < 0)
    throw Error(ErrorCode::InvalidArgument, "scan needs 0 < start <= max_epsilon");
  ConvergenceScan scan;
  auto converges = [&](double eps) {
    ++scan.probes;
    const DefectFunctional rho{family, eps};
    try {
      verify_on_hypersurface(newton_continue(rho, f0, g0, opt).state, rho, 4, opt);
      return true;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidArgument) throw;
      return false;
    }
  };
  double lo = 0.0, hi = std::numeric_limits<double>::infinity();
  for (double eps = start; eps <= max_epsilon; eps *= 2.0) {
    if (!converges(eps)) {
      hi = eps;
      break;
    }
    lo = eps;
  }
  if (std::isfinite(hi))
    for (int i = 0; i < bisections; ++i) {
      const double mid = 0.5 * (lo + hi);
      (converges(mid) ? lo : hi) = mid;
    }
  scan.radius = lo;
  scan.failed_at = hi;
  return scan;
}

}  // namespace bsurf
