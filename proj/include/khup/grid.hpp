#pragma once

// Uniformly sampled functions on R and the Riemann-sum Fourier and linear
// canonical transforms between symmetric grids.

#include "khup/numerics.hpp"
#include "khup/parallel.hpp"

#include <functional>

namespace khup {

/// Samples f(x0 + m dx), m = 0..n-1.
struct GridFunction {
  double x0 = 0.0;
  double dx = 1.0;
  ComplexVector samples;

  std::size_t size() const { return static_cast<std::size_t>(samples.size()); }
  double x(std::size_t m) const { return x0 + static_cast<double>(m) * dx; }
  /// x0 = -(n-1) dx / 2 up to rounding.
  bool symmetric() const;
};

/// Symmetric grid on [-L, L) with n points: dx = 2L/n, x0 = -(n-1)dx/2.
GridFunction sample(const std::function<Complex(double)>& fn, std::size_t n, double half_width);

struct AdaptiveSample {
  GridFunction f;
  double tail_fraction = 0.0;
  int doublings = 0;
  bool converged = false;
};

/// Starts at half-width L with n points and doubles both (dx fixed) until
/// tail_fraction < tail_limit or n would exceed max_n.
AdaptiveSample sample_adaptive(const std::function<Complex(double)>& fn, std::size_t n = 4096,
                               double half_width = 8.0, double tail_limit = 1e-8,
                               std::size_t max_n = std::size_t{1} << 20);

/// L1 mass outside the central 80% of the grid divided by the total.
double tail_fraction(const GridFunction& f);

/// (dx sum |f|^p)^{1/p}; max |f| for p = inf.
double grid_norm(const GridFunction& f, NormIndex p);

enum class DftMethod { Auto, Direct, DirectParallel, Fft };

/// out_j = sum_m in_m exp(sign 2 pi i (m-c)(j-c)/n), c = (n-1)/2, sign = +-1.
/// Phases come from an exact integer table, so Direct and Fft agree to
/// rounding. Auto uses Fft for n >= 64.
ComplexVector centered_dft(const ComplexVector& in, int sign, DftMethod method = DftMethod::Auto);

/// f^(xi_j) = dx sum_m f(x_m) e^{-2 pi i x_m xi_j} on the dual symmetric grid
/// with dxi = 1/(n dx). Applying it twice gives exactly f(-x).
GridFunction ft_grid(const GridFunction& f, DftMethod method = DftMethod::Auto);

struct LCTParams {
  double a = 0.0, b = 1.0, c = -1.0, d = 0.0;
  /// Checks ad - bc = 1 to 1e-12 and b != 0.
  void validate() const;
  LCTParams inverse() const { return {d, -b, -c, a}; }
};

/// L_M f(xi) = e^{-i pi sgn(b)/4} / sqrt|b| * int f(x) e^{i pi (d xi^2 - 2 x xi + a x^2)/b} dx
/// by Riemann sum, output grid dxi = |b|/(n dx). L_{M^-1} undoes it exactly
/// on the discrete grid.
GridFunction lct_apply(const LCTParams& m, const GridFunction& f, DftMethod method = DftMethod::Auto);

/// dx sum x^2 |f|^2
double variance(const GridFunction& f);
/// dx sum |x|^r |f|^2, r > 1.
double moment(const GridFunction& f, double r);

}  // namespace khup
