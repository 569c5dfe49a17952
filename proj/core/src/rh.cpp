#include "bsurf/rh.hpp"

#include <cmath>
#include <cstdlib>

#include <Eigen/SVD>

#include "bsurf/error.hpp"
#include "bsurf/parallel.hpp"

namespace bsurf {

Complex SeriesLayout::basis(int idx, Complex z) const noexcept {
  const int n = degree(idx);
  if (n >= 0) return std::pow(z, n);
  return std::pow(inner_radius / z, -n);
}

Complex SeriesLayout::evaluate(const std::vector<Complex>& coeffs, Complex z) const noexcept {
  Complex v{};
  for (int i = 0; i < size() && i < static_cast<int>(coeffs.size()); ++i)
    v += coeffs[static_cast<std::size_t>(i)] * basis(i, z);
  return v;
}

void RHProblem::validate() const {
  const auto& loops = domain.loops();
  if (a.size() != loops.size() || c.size() != loops.size())
    throw Error(ErrorCode::InvalidArgument, "RH data must have one sample list per boundary loop");
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const auto n = static_cast<std::size_t>(loops[i].samples());
    if (a[i].size() != n || c[i].size() != n)
      throw Error(ErrorCode::InvalidArgument,
                  "RH data sample count mismatch on loop " + std::to_string(i));
    for (Complex v : a[i])
      if (!(std::abs(v) > 1e-10))
        throw Error(ErrorCode::InvalidArgument, "coefficient a vanishes on loop " + std::to_string(i));
  }
}

RHProblem BoundaryData::sample(int samples_per_loop) const {
  RHProblem p{domain.resampled(samples_per_loop), {}, {}};
  for (std::size_t i = 0; i < p.domain.loops().size(); ++i) {
    const auto pts = p.domain.loops()[i].points();
    std::vector<Complex> av;
    std::vector<double> cv;
    for (Complex z : pts) {
      av.push_back(a(i, z));
      cv.push_back(c ? c(i, z) : 0.0);
    }
    p.a.push_back(std::move(av));
    p.c.push_back(std::move(cv));
  }
  return p;
}

int rh_index(const RHProblem& problem) {
  problem.validate();
  return boundary_index(problem.a, problem.domain);
}

int koppelman_dimension(int index, const PlanarDomain& domain) noexcept {
  return 2 * index - (2 * domain.genus() + domain.boundary_components() - 2);
}

namespace {

struct Collocation {
  std::vector<Complex> points;
  std::vector<Complex> a;
  std::vector<double> c;
};

Collocation flatten(const RHProblem& p) {
  Collocation col;
  for (std::size_t i = 0; i < p.domain.loops().size(); ++i) {
    const auto pts = p.domain.loops()[i].points();
    col.points.insert(col.points.end(), pts.begin(), pts.end());
    col.a.insert(col.a.end(), p.a[i].begin(), p.a[i].end());
    col.c.insert(col.c.end(), p.c[i].begin(), p.c[i].end());
  }
  return col;
}

// Unknowns are (Re b_n, Im b_n); Re(conj(a)(u + i w) phi) = u Re(v) - w Im(v), v = conj(a) phi.
Eigen::MatrixXd assemble(const Collocation& col, const SeriesLayout& layout) {
  const auto rows = static_cast<Eigen::Index>(col.points.size());
  Eigen::MatrixXd m(rows, 2 * layout.size());
  parallel_for(col.points.size(), [&](std::size_t s) {
    const Complex ca = std::conj(col.a[s]);
    for (int n = 0; n < layout.size(); ++n) {
      const Complex v = ca * layout.basis(n, col.points[s]);
      m(static_cast<Eigen::Index>(s), 2 * n) = v.real();
      m(static_cast<Eigen::Index>(s), 2 * n + 1) = -v.imag();
    }
  });
  return m;
}

std::vector<Complex> to_complex(const Eigen::VectorXd& x) {
  std::vector<Complex> out(static_cast<std::size_t>(x.size() / 2));
  for (std::size_t n = 0; n < out.size(); ++n) {
    const auto i = static_cast<Eigen::Index>(2 * n);
    out[n] = {x(i), x(i + 1)};
  }
  return out;
}

}  // namespace

double boundary_defect(const RHProblem& problem, const SeriesLayout& layout,
                       const std::vector<Complex>& coeffs, bool homogeneous) {
  double defect = 0.0;
  for (std::size_t i = 0; i < problem.domain.loops().size(); ++i) {
    const auto& loop = problem.domain.loops()[i];
    for (int j = 0; j < loop.samples(); ++j) {
      const auto js = static_cast<std::size_t>(j);
      const Complex k = layout.evaluate(coeffs, loop.point(j));
      const double target = homogeneous ? 0.0 : problem.c[i][js];
      defect = std::max(defect, std::abs((std::conj(problem.a[i][js]) * k).real() - target));
    }
  }
  return defect;
}

RHSolution rh_solve(const RHProblem& problem, int modes, double svd_tol) {
  problem.validate();
  RHSolution sol;
  sol.index = boundary_index(problem.a, problem.domain);
  if (modes < 4 * std::abs(sol.index) + 8)
    throw Error(ErrorCode::InvalidArgument, "rh_solve needs modes >= 4|index| + 8 (index " +
                                                std::to_string(sol.index) + ")");
  if (problem.domain.samples_per_loop() < 4 * modes)
    throw Error(ErrorCode::InvalidArgument, "rh_solve needs >= 4 * modes samples per loop");

  sol.layout = SeriesLayout::for_domain(problem.domain, modes);
  const Collocation col = flatten(problem);
  const Eigen::MatrixXd m = assemble(col, sol.layout);
  if (m.rows() < m.cols())
    throw Error(ErrorCode::IllPosedSampling, "collocation matrix has fewer rows than columns");

  Eigen::VectorXd rhs(m.rows());
  for (Eigen::Index s = 0; s < m.rows(); ++s) rhs(s) = col.c[static_cast<std::size_t>(s)];

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double threshold = svd_tol * (sigma.size() > 0 ? sigma(0) : 0.0);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(m.cols());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    sol.singular_values.push_back(sigma(i));
    if (sigma(i) > threshold) {
      x += svd.matrixV().col(i) * (svd.matrixU().col(i).dot(rhs) / sigma(i));
    } else {
      sol.kernel_basis.push_back(to_complex(svd.matrixV().col(i)));
    }
  }
  sol.particular = to_complex(x);
  sol.residual = (m * x - rhs).cwiseAbs().maxCoeff();
  for (const auto& kb : sol.kernel_basis)
    sol.kernel_residual = std::max(sol.kernel_residual, boundary_defect(problem, sol.layout, kb, true));

  const auto& d = problem.domain;
  sol.solvability_guaranteed = sol.index >= 2 * d.genus() + d.boundary_components() - 1;
  sol.solved = sol.residual < kResidualTolerance;
  return sol;
}

KernelDimension kernel_dimension(const BoundaryData& data, int modes, double svd_tol) {
  KernelDimension kd;
  kd.modes = modes;
  kd.dimension = rh_solve(data.sample(4 * modes), modes, svd_tol).kernel_dimension();
  kd.refined_dimension =
      rh_solve(data.sample(4 * (modes + 4)), modes + 4, svd_tol).kernel_dimension();
  if (kd.dimension != kd.refined_dimension)
    throw Error(ErrorCode::UnstableDimension,
                "kernel dimension " + std::to_string(kd.dimension) + " at " +
                    std::to_string(modes) + " modes, " + std::to_string(kd.refined_dimension) +
                    " at " + std::to_string(modes + 4));
  return kd;
}

}  // namespace bsurf
