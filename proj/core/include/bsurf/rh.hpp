#pragma once

#include <functional>
#include <vector>

#include "bsurf/winding.hpp"

namespace bsurf {

inline constexpr double kDefaultSvdTolerance = 1e-8;
/// Boundary defect below which a solution counts as solving the problem.
inline constexpr double kResidualTolerance = 1e-8;

/// Index layout of the truncated series used for boundary-holomorphic functions.
///
/// Disc: z^n for n = 0..N. Annulus: z^n for n = 0..N and (r / z)^|n| for
/// n = -N..-1, so every basis function has sup norm 1 on the boundary.
struct SeriesLayout {
  DomainKind kind = DomainKind::Disc;
  double inner_radius = 0.0;
  int modes = 0;

  static SeriesLayout for_domain(const PlanarDomain& domain, int modes) {
    return {domain.kind(), domain.inner_radius(), modes};
  }

  int size() const noexcept { return kind == DomainKind::Disc ? modes + 1 : 2 * modes + 1; }
  int degree(int idx) const noexcept { return kind == DomainKind::Disc ? idx : idx - modes; }
  Complex basis(int idx, Complex z) const noexcept;
  Complex evaluate(const std::vector<Complex>& coeffs, Complex z) const noexcept;
};

/// Sampled data for Re(conj(a) k) = c on the boundary loops of `domain`.
struct RHProblem {
  PlanarDomain domain;
  /// a[loop][j] and c[loop][j] sit at domain.loops()[loop].point(j).
  std::vector<std::vector<Complex>> a;
  std::vector<std::vector<double>> c;

  /// Throws `InvalidArgument` on sample-count mismatches or |a| <= 1e-10.
  void validate() const;
};

/// Boundary data as functions, so the same problem can be sampled at any density.
struct BoundaryData {
  PlanarDomain domain;
  std::function<Complex(std::size_t loop, Complex z)> a;
  std::function<double(std::size_t loop, Complex z)> c;

  RHProblem sample(int samples_per_loop) const;
};

struct RHSolution {
  SeriesLayout layout;
  /// Minimal-norm least-squares solution.
  std::vector<Complex> particular;
  /// Orthonormal (real inner product) basis of the numerical kernel.
  std::vector<std::vector<Complex>> kernel_basis;
  int index = 0;
  /// Max boundary defect of the particular solution at the collocation points.
  double residual = 0.0;
  /// Max boundary defect of the kernel elements.
  double kernel_residual = 0.0;
  std::vector<double> singular_values;
  /// index >= 2g + m - 1, where solvability for every c is guaranteed.
  bool solvability_guaranteed = false;
  bool solved = false;

  int kernel_dimension() const noexcept { return static_cast<int>(kernel_basis.size()); }
  Complex evaluate(Complex z) const noexcept { return layout.evaluate(particular, z); }
};

/// Index of a: the sum of winding numbers over the coherently oriented loops.
int rh_index(const RHProblem& problem);

/// Least-squares spectral collocation for Re(conj(a) k) = c.
///
/// Requires modes >= 4 |index| + 8 and at least 4 * modes samples per loop.
/// Singular directions below svd_tol * sigma_max form the kernel.
RHSolution rh_solve(const RHProblem& problem, int modes, double svd_tol = kDefaultSvdTolerance);

/// 2 index - (2g + m - 2).
int koppelman_dimension(int index, const PlanarDomain& domain) noexcept;

struct KernelDimension {
  int dimension = 0;
  /// Count at modes + 4, which must agree.
  int refined_dimension = 0;
  int modes = 0;
};

/// Kernel dimension at `modes` and `modes + 4`, each sampled with 4 * modes points
/// per loop. Throws `UnstableDimension` if the two counts differ.
KernelDimension kernel_dimension(const BoundaryData& data, int modes,
                                 double svd_tol = kDefaultSvdTolerance);

/// Max |Re(conj(a) k) - c| of a series over the samples of `problem`.
double boundary_defect(const RHProblem& problem, const SeriesLayout& layout,
                       const std::vector<Complex>& coeffs, bool homogeneous = false);

}  // namespace bsurf
