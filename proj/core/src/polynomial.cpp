#include "bsurf/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "bsurf/error.hpp"

namespace bsurf {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Complex c) { return Polynomial(std::vector<Complex>{c}); }

Polynomial Polynomial::monomial(int degree, Complex c) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "monomial degree must be >= 0");
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex leading) {
  std::vector<Complex> c{leading};
  for (Complex r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] *= -r;
  }
  return Polynomial(std::move(c));
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (Complex c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::operator()(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::deflate(Complex y) const {
  if (coeffs_.size() <= 1) return {};
  const std::size_t n = coeffs_.size() - 1;
  std::vector<Complex> q(n);
  Complex acc = coeffs_[n];
  for (std::size_t k = n; k-- > 0;) {
    q[k] = acc;
    acc = coeffs_[k] + acc * y;
  }
  return Polynomial(std::move(q));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
  for (Complex& c : coeffs_) c *= s;
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Complex poly_eval(const Polynomial& p, Complex z) noexcept { return p(z); }

bool satisfies_root_residual(const Polynomial& p, Complex r) noexcept {
  const double bound =
      kRootTolerance * p.max_abs_coeff() * std::pow(1.0 + std::abs(r), p.degree());
  return std::abs(p(r)) <= bound;
}

namespace {

std::vector<Complex> companion_eigenvalues(std::span<const Complex> c) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 1) return {-c[0] / c[1]};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  return roots;
}

Complex polish(const Polynomial& p, const Polynomial& dp, Complex r) {
  double best = std::abs(p(r));
  for (int it = 0; it < 8 && best > 0.0; ++it) {
    const Complex d = dp(r);
    if (d == Complex{}) break;
    const Complex cand = r - p(r) / d;
    const double res = std::abs(p(cand));
    if (!(res < best)) break;
    r = cand;
    best = res;
  }
  return r;
}

}  // namespace

std::vector<Complex> poly_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "poly_roots of the zero polynomial");
  if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "poly_roots needs degree >= 1");

  const auto& c = p.coeffs();
  std::size_t low = 0;
  while (c[low] == Complex{}) ++low;

  std::vector<Complex> roots(low, Complex{});
  if (low + 1 < c.size()) {
    std::span<const Complex> rest(c.data() + low, c.size() - low);
    const Polynomial reduced(std::vector<Complex>(rest.begin(), rest.end()));
    const Polynomial dreduced = reduced.derivative();
    for (Complex r : companion_eigenvalues(rest)) roots.push_back(polish(reduced, dreduced, r));
  }

  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace bsurf
