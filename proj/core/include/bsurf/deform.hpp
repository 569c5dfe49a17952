#pragma once

#include <cstdint>
#include <vector>

#include "bsurf/blaschke.hpp"
#include "bsurf/error.hpp"
#include "bsurf/rh.hpp"

namespace bsurf {

enum class RhoFamily {
  /// |z|^2 - (1 - eps)
  Radial,
  /// |z|^2 - 1 + eps Re(w)
  WCoupled,
  /// |z|^2 - 1 + eps Re(z conj(w))
  Mixed,
};

/// Real defining function rho(z, w) with analytic first derivatives.
struct DefectFunctional {
  RhoFamily family = RhoFamily::Radial;
  double epsilon = 0.0;

  double operator()(Complex z, Complex w) const noexcept;
  /// d rho / d z
  Complex dz(Complex z, Complex w) const noexcept;
  /// d rho / d conj(z)
  Complex dzbar(Complex z, Complex w) const noexcept;
};

/// f = f0 + correction on the closed disc, together with the fixed second component.
class BoundaryMapState {
 public:
  BoundaryMapState(BlaschkeProduct f0, Polynomial g0, Polynomial correction = {});

  const BlaschkeProduct& f0() const noexcept { return f0_; }
  const Polynomial& g0() const noexcept { return g0_; }
  /// Power-series part added to f0.
  const Polynomial& correction() const noexcept { return correction_; }

  Complex f(Complex x) const noexcept { return f0_(x) + correction_(x); }
  Complex df(Complex x) const noexcept;
  Complex g(Complex x) const noexcept { return g0_(x); }

  /// max |f| over `samples` points of the unit circle.
  double boundary_sup(int samples) const;

  BoundaryMapState with_correction(Polynomial correction) const {
    return {f0_, g0_, std::move(correction)};
  }

 private:
  BlaschkeProduct f0_;
  Polynomial g0_;
  Polynomial correction_;
};

inline constexpr double kVanishingCoefficient = 1e-8;
/// The map is only defined on sup|f| < 2.
inline constexpr double kStateBound = 2.0;

/// a(x) = 2 d rho / d conj(z) at (f(x), g0(x)) for every point of `loop`.
/// Throws `VanishingCoefficient` if |a| < 1e-8 somewhere.
std::vector<Complex> linearized_coefficient(const DefectFunctional& rho,
                                            const BoundaryMapState& state,
                                            const BoundaryLoop& loop);

/// max |rho(f, g0)| over `samples` points of the unit circle.
double boundary_residual(const DefectFunctional& rho, const BoundaryMapState& state, int samples);

struct NewtonOptions {
  int modes = 48;
  int samples = 256;
  int max_iter = 12;
  double tol = 1e-8;
  double svd_tol = kDefaultSvdTolerance;
};

struct ContinuationResult {
  BoundaryMapState state;
  /// Boundary residual before the first step and after each step.
  std::vector<double> trace;
  /// Step-halvings used in each iteration.
  std::vector<int> halvings;
  int iterations = 0;
  /// Kernel dimension of the first linearized problem.
  int kernel_dimension = 0;
};

class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& what, std::vector<double> trace)
      : Error(ErrorCode::NoConvergence, what), trace_(std::move(trace)) {}

  const std::vector<double>& trace() const noexcept { return trace_; }

 private:
  std::vector<double> trace_;
};

/// Newton iteration f <- f + k with k the minimal-norm solution of
/// Re(conj(a) k) = -rho(f, g0) on the boundary, until max |rho| < tol.
/// Throws `NoConvergenceError` after max_iter steps or when sup|f| reaches 2.
ContinuationResult newton_continue(const DefectFunctional& rho, const BlaschkeProduct& f0,
                                   const Polynomial& g0, const NewtonOptions& options = {});

struct HypersurfaceReport {
  int boundary_samples = 0;
  double out_of_sample_residual = 0.0;
  int interior_samples = 0;
  /// max rho(F(x)) over interior samples; must be negative.
  double interior_max = 0.0;
  int pairs = 0;
  double min_image_distance = 0.0;
  /// min |F(x) - F(y)| / |x - y| over the sampled pairs.
  double min_image_ratio = 0.0;
};

/// Re-checks a converged state at `finer_factor` times the solve sampling, the
/// sign of rho on a 20 x 25 polar grid of radius <= 0.95 and injectivity of
/// F = (f, g0) on 2000 random pairs.
/// Throws `OutOfSampleFailure` (residual >= 10 tol), `InteriorEscape` or
/// `InjectivityFailure`.
HypersurfaceReport verify_on_hypersurface(const BoundaryMapState& state,
                                          const DefectFunctional& rho, int finer_factor,
                                          const NewtonOptions& options = {},
                                          std::uint64_t seed = 0);

struct ConvergenceScan {
  /// Largest epsilon found at which continuation and verification both succeed; 0 if none.
  double radius = 0.0;
  /// Smallest failing epsilon bracketing `radius`; +inf if max_epsilon was reached.
  double failed_at = 0.0;
  int probes = 0;
};

/// Empirical convergence radius of a family: doubles epsilon from `start` until
/// continuation or `verify_on_hypersurface` fails (or max_epsilon), then bisects
/// the bracket `bisections` times.
ConvergenceScan convergence_radius(RhoFamily family, const BlaschkeProduct& f0, const Polynomial& g0,
                                   const NewtonOptions& options = {}, double start = 0.005,
                                   double max_epsilon = 4.0, int bisections = 6);

}  // namespace bsurf
