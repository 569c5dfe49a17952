#pragma once

// Independent reference computations used only by the tests. None of these call
// into the library's root finder, winding counter or solvers.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

inline Complex eval(const std::vector<Complex>& c, Complex z) {
  Complex v = 0.0, p = 1.0;
  for (Complex a : c) {
    v += a * p;
    p *= z;
  }
  return v;
}

inline std::vector<Complex> derivative(const std::vector<Complex>& c) {
  std::vector<Complex> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return d;
}

/// Weierstrass / Durand-Kerner simultaneous iteration.
inline std::vector<Complex> durand_kerner(std::vector<Complex> c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  const std::size_t n = c.size() - 1;
  const Complex lead = c.back();
  for (auto& a : c) a /= lead;
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(Complex(0.4, 0.9), static_cast<double>(i));
  for (int it = 0; it < 2000; ++it) {
    double move = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex den = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const Complex step = eval(c, z[i]) / den;
      z[i] -= step;
      move = std::max(move, std::abs(step));
    }
    if (move < 1e-15) break;
  }
  return z;
}

/// (1 / 2 pi i) times the contour integral of p'/p over |z| = r, by the trapezoid rule.
inline int argument_integral(const std::vector<Complex>& c, double r, int n = 8192) {
  const auto d = derivative(c);
  Complex acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / n);
    acc += eval(d, z) / eval(c, z) * z;
  }
  return static_cast<int>(std::lround((acc / static_cast<double>(n)).real()));
}

inline Complex blaschke(const std::vector<Complex>& zeros, Complex z) {
  Complex v = 1.0;
  for (Complex a : zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

/// Largest distance from a point of `a` to its nearest partner in `b`, after
/// pairing greedily; +inf if the sizes differ.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Complex x : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](Complex p, Complex q) {
      return std::abs(p - x) < std::abs(q - x);
    });
    worst = std::max(worst, std::abs(*it - x));
    b.erase(it);
  }
  return worst;
}

/// Sigma_z for f = z^2, g1 = x - x^3, g2 = x^3: the fiber {w, -w} gives a = 1 - 1/z.
inline Complex worked_sigma(Complex z) { return 1.0 - 1.0 / z; }

/// For a = z^k on the unit circle the homogeneous solutions are the polynomials
/// of degree <= 2k with c[2k - n] = -conj(c[n]). Returns the largest violation.
inline double disc_kernel_violation(const std::vector<Complex>& c, int k) {
  double worst = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    const int m = 2 * k - static_cast<int>(n);
    if (m < 0) {
      worst = std::max(worst, std::abs(c[n]));
    } else {
      worst = std::max(worst, std::abs(c[n] + std::conj(c[static_cast<std::size_t>(m)])));
    }
  }
  return worst;
}

inline Complex random_in_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

inline Complex random_in_box(std::mt19937_64& rng, double half) {
  std::uniform_real_distribution<double> u(-half, half);
  return {u(rng), u(rng)};
}

}  // namespace oracle
