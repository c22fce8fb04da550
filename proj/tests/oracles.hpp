#pragma once
// Reference computations written independently of the library code paths.

#include "khup/numerics.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using khup::Complex;
using khup::ComplexMatrix;
using khup::ComplexVector;

inline double pnorm(const ComplexVector& v, double p) {
  if (std::isinf(p)) return v.cwiseAbs().maxCoeff();
  double s = 0;
  for (auto x : v) s += std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

// Z_n character table, entry (chi, x) = exp(-2 pi i chi x / n).
inline ComplexMatrix dft(int n) {
  ComplexMatrix f(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      f(r, c) = std::polar(1.0, -2.0 * std::numbers::pi * ((r * c) % n) / n);
  return f;
}

inline double inf_inf_norm(const ComplexMatrix& m) {
  double best = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double row = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

// Smallest |T| with ||v restricted to T^c||_p <= eps ||v||_p, by exhaustive search.
inline std::size_t brute_approx_support(const ComplexVector& v, double p, double eps) {
  const auto n = static_cast<int>(v.size());
  double total = 0;
  for (auto x : v) total += std::pow(std::abs(x), p);
  const double budget = std::pow(eps, p) * total;
  std::size_t best = static_cast<std::size_t>(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    double outside = 0;
    for (int i = 0; i < n; ++i)
      if (!(mask & (1u << i))) outside += std::pow(std::abs(v[i]), p);
    if (outside <= budget * (1 + 1e-12)) best = std::min<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

// out_j = sum_m in_m exp(sign 2 pi i (m-c)(j-c)/n), c = (n-1)/2, in long double.
inline ComplexVector centered_dft(const ComplexVector& in, int sign) {
  const auto n = in.size();
  const long double c = (n - 1) / 2.0L;
  ComplexVector out(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    std::complex<long double> s = 0;
    for (Eigen::Index m = 0; m < n; ++m) {
      const long double ph = sign * 2.0L * std::numbers::pi_v<long double> * (m - c) * (j - c) / n;
      s += std::complex<long double>(in[m].real(), in[m].imag()) *
           std::complex<long double>(std::cos(ph), std::sin(ph));
    }
    out[j] = Complex(static_cast<double>(s.real()), static_cast<double>(s.imag()));
  }
  return out;
}

// int |x|^r e^{-2 pi x^2} dx, the r-th moment of |gaussian|^2.
inline double gaussian_moment(double r) {
  return std::tgamma((r + 1) / 2) / std::pow(2 * std::numbers::pi, (r + 1) / 2);
}

// F(g_c) from ||g_c||_inf = g_c(0) and the three Gaussian overlap integrals.
inline double gc_F(double c) {
  const double peak = 1 / std::sqrt(c) + std::sqrt(c);
  const double n2 = 1 / std::sqrt(2.0) + 1 / std::sqrt(2.0) + 2 / std::sqrt(1 / (c * c) + c * c);
  return peak * peak / n2;
}

// F(f_{a,b}) with |f^|_inf = |(a+bi)^2|^{-1/2} and ||f||_2^2 = (2(a^2-b^2))^{-1/2}.
inline double fab_F(double a, double b) {
  return std::sqrt(2 * (a * a - b * b)) / std::sqrt(a * a + b * b);
}

}  // namespace oracle
