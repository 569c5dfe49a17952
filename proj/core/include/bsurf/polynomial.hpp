#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bsurf {

using Complex = std::complex<double>;

/// Dense polynomial with complex coefficients, lowest degree first.
///
/// Trailing (highest-degree) coefficients that are exactly zero are stripped on
/// construction, so the zero polynomial is the empty coefficient list and
/// `degree()` is `coeffs().size() - 1` otherwise.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial constant(Complex c);
  static Polynomial monomial(int degree, Complex c = 1.0);
  /// leading * prod (z - r).
  static Polynomial from_roots(std::span<const Complex> roots, Complex leading = 1.0);

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Complex leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }
  double max_abs_coeff() const noexcept;

  Complex operator()(Complex z) const noexcept;
  Polynomial derivative() const;

  /// Quotient of synthetic division by (t - y); the remainder p(y) is dropped.
  Polynomial deflate(Complex y) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(Complex s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex s) { return a *= s; }
  friend Polynomial operator*(Complex s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  std::vector<Complex> coeffs_;
};

/// Horner evaluation; 0 for the zero polynomial.
Complex poly_eval(const Polynomial& p, Complex z) noexcept;

/// Relative residual tolerance used by `poly_roots`.
inline constexpr double kRootTolerance = 1e-10;

/// All complex roots with multiplicity, sorted by real part then imaginary part.
///
/// Companion-matrix eigenvalues followed by guarded Newton polishing. Exact
/// zero low-order coefficients are split off as exact zero roots. Throws
/// `ErrorCode::ZeroPolynomial` for p == 0 and `InvalidArgument` for constants.
std::vector<Complex> poly_roots(const Polynomial& p);

/// |p(r)| <= kRootTolerance * max|coeff| * (1 + |r|)^deg.
bool satisfies_root_residual(const Polynomial& p, Complex r) noexcept;

}  // namespace bsurf
