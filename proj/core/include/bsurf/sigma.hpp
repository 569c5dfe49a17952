#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "bsurf/blaschke.hpp"

namespace bsurf {

/// Points closer than this are treated as one fiber point.
inline constexpr double kFiberCluster = 1e-7;
/// Minimal value separation demanded of g1 on critical fibers and of g1' there.
inline constexpr double kSeparationFloor = 1e-8;

/// Distinct points of f^{-1}(Z), Z the critical values, snapped onto the critical
/// points where they coincide. Empty for degree 1.
std::vector<Complex> critical_fiber_points(const BlaschkeProduct& f);

/// Checks that g1 separates each critical fiber and has nonvanishing derivative
/// on f^{-1}(Z). Throws `G1Invalid` otherwise.
void check_g1(const BlaschkeProduct& f, const Polynomial& g1);

/// A pair x != y with f(x) = f(y) = z and g1(x) = g1(y).
struct CollidingPair {
  Complex z;
  Complex x;
  Complex y;
};

/// The finitely many fibers over the closed disc on which g1 fails to separate,
/// found by Newton's method on (f(x) - f(y), g1(x) - g1(y)) / (x - y) from seeds
/// on a polar grid of fibers.
std::vector<CollidingPair> colliding_pairs(const BlaschkeProduct& f, const Polynomial& g1);

/// q(x) prod (x - c)^2 over c in f^{-1}(Z), with q the first of 1, x, x + 1, x^2,
/// x^2 + 1, x^2 + x, ... (degree <= deg f + 2) separating every colliding pair.
/// Throws `G1Invalid` or `SeparationImpossible`.
Polynomial build_g2(const BlaschkeProduct& f, const Polynomial& g1);

struct SeparatingData {
  BlaschkeProduct f;
  Polynomial g1;
  Polynomial g2;
  std::vector<Complex> critical_values;
  std::vector<Complex> critical_fiber;
};

/// Validates g1 and that g2 vanishes to second order on f^{-1}(Z) (`G2Invalid`).
SeparatingData make_separating_data(BlaschkeProduct f, Polynomial g1, Polynomial g2);

/// Fiberwise view of the set of (z, a) for which g1 + a g2 fails to separate f^{-1}(z).
class SigmaVariety {
 public:
  explicit SigmaVariety(SeparatingData data) : data_(std::move(data)) {}

  const SeparatingData& data() const noexcept { return data_; }
  int degree() const noexcept { return data_.f.degree(); }

  /// Distinct points of f^{-1}(z).
  std::vector<Complex> fiber_points(Complex z) const;
  /// Sigma_z; throws `SeparationViolated` if g1 and g2 both fail on a pair.
  std::vector<Complex> fiber(Complex z) const;
  /// min |a - s| over s in Sigma_z, +inf when Sigma_z is empty.
  double distance(Complex z, Complex a) const;
  /// Whether g1 + a g2 takes pairwise distinct values (gap > tol) on f^{-1}(z).
  bool separates(Complex z, Complex a, double tol = 1e-9) const;

 private:
  SeparatingData data_;
};

std::vector<Complex> sigma_fiber(const SigmaVariety& v, Complex z);

struct RoundDisc {
  Complex center;
  double radius = 1.0;

  bool contains(Complex z) const noexcept { return std::abs(z - center) <= radius; }
};

/// Square-grid points of spacing h inside the closed disc, also clipped to the closed unit disc.
std::vector<Complex> disc_grid(const RoundDisc& disc, double h);

/// min over zs of distance(z, alpha(z)); +inf if every Sigma_z is empty.
double avoidance_margin(const SigmaVariety& v, const Polynomial& alpha, const std::vector<Complex>& zs);

struct AlphaChoice {
  Polynomial alpha;
  /// Arc vertices (critical values ordered by real part, extended at both ends).
  std::vector<Complex> arc_vertices;
  std::vector<Complex> arc;
  double arc_margin = 0.0;
  /// Grid points of V.
  std::vector<Complex> region;
  double grid_spacing = 0.0;
  double tube_radius = 0.0;
  RoundDisc d0;
  /// min of the avoidance distance over grid points of D0; +inf if Sigma is empty.
  double margin = std::numeric_limits<double>::infinity();
  int fit_degree = 0;
  bool sigma_empty = false;
};

inline constexpr int kArcSamples = 256;
inline constexpr int kMaxAlphaDegree = 8;

/// Searches a polynomial alpha whose graph avoids Sigma over a round disc D0 around
/// the arc through the critical values.
/// Throws `NoAvoidingGraph` or `NoRoundDisc`.
AlphaChoice choose_alpha(const SigmaVariety& v);

struct EmbeddingReport {
  /// Points of f^{-1}(D0) sampled.
  int samples = 0;
  int pairs = 0;
  double min_image_distance = 0.0;
  /// min |F'(x) - F'(y)| / |x - y|.
  double min_separation_ratio = 0.0;
  double min_immersion_norm = 0.0;
  /// max | |sigma(f(x))| - 1 | over f^{-1}(bD0) samples.
  double max_boundary_deviation = 0.0;
  Complex worst_x;
  Complex worst_y;
};

inline constexpr double kInjectivityFloor = 1e-8;

/// g = g1 + alpha(f) g2, F' = ((f - c) / r, g) on f^{-1}(D0), checked on `pairs` random
/// pairs plus every pair of fiber mates. Throws `InjectivityFailure`.
EmbeddingReport assemble_embedding(const SigmaVariety& v, const Polynomial& alpha,
                                   const RoundDisc& d0, std::uint64_t seed = 0,
                                   int pairs = 10000);

}  // namespace bsurf
