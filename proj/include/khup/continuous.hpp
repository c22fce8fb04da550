#pragma once

// Uncertainty checks on R: the Fourier transform (k = 1) and the LCT
// sqrt|b| L_M (k = |b|) as k-Hadamard operators on grid functions.

#include "khup/grid.hpp"
#include "khup/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace khup {

class GridOperator {
 public:
  static GridOperator fourier() { return GridOperator(); }
  /// The k-Hadamard normalization sqrt|b| L_M, k = |b|.
  static GridOperator lct(const LCTParams& m);
  /// "ft" or "lct:a,b,c,d".
  static GridOperator parse(const std::string& spec);

  bool is_fourier() const { return !lct_; }
  const LCTParams& params() const { return m_; }
  double k() const { return lct_ ? std::abs(m_.b) : 1.0; }
  GridFunction apply(const GridFunction& f, DftMethod method = DftMethod::Auto) const;
  std::string name() const;

 private:
  GridOperator() = default;
  bool lct_ = false;
  LCTParams m_;
};

inline constexpr double kGridTol = 1e-9;

/// ||f||_1 ||Af||_1 >= k ||f||_inf ||Af||_inf
InequalityReport primary_up_grid_check(const GridFunction& f, const GridOperator& op,
                                       double tol = kGridTol);

/// ||f||_1 ||Af||_1 >= k^{1-1/q} ||f||_q ||Af||_q
InequalityReport norm_up_grid_check(const GridFunction& f, const GridOperator& op, NormIndex q,
                                    double tol = kGridTol);

/// lambda(supp f) lambda(supp Af) >= k with supports thresholded at
/// threshold * max|.|. Context carries the product at 1e-4 and 1e-8 too.
InequalityReport support_measure_check(const GridFunction& f, const GridOperator& op,
                                       double threshold = 1e-6, double tol = kGridTol);

/// 2^{-(10q-8)/(q-1)}, with q = inf giving 2^-10.
double heisenberg_constant(NormIndex q);

/// V(f) V(Af) >= C_q k^{3-2/q} ||f||_q^2 ||Af||_q^2, q in (1, inf].
InequalityReport heisenberg_q_check(const GridFunction& f, const GridOperator& op, NormIndex q,
                                    double tol = kGridTol);

/// ||g||_1/||g||_q <= (2^{(5q-4)/(q-1)} V(g)/||g||_q^2)^{(q-1)/(3q-2)},
/// reported with Relation::AtMost.
InequalityReport variance_ratio_bound_check(const GridFunction& g, NormIndex q,
                                            double tol = kGridTol);

/// (q-1)/(qr+q-2), 1/(r+1) at q = inf.
double moment_exponent(double r, NormIndex q);
/// C_{r,q} = (r-1)^{e_r} 2^{-(2qr+q-r-2)/(qr+q-2)}.
double moment_constant(double r, NormIndex q);

/// M_r(f)^{e_r} M_s(Af)^{e_s} >= C_{r,q} C_{s,q} k^{1-1/q} ||f||_q^{2e_r} ||Af||_q^{2e_s}
InequalityReport moment_up_check(const GridFunction& f, const GridOperator& op, double r, double s,
                                 NormIndex q, double tol = kGridTol);

/// M_r(f) M_r(Af) >= C_{r,q}^{2(qr+q-2)/(q-1)} k^{(qr+q-2)/q} ||f||_q^2 ||Af||_q^2
InequalityReport moment_up_corollary_check(const GridFunction& f, const GridOperator& op, double r,
                                           NormIndex q, double tol = kGridTol);

/// F(f) = ||f||_inf ||f^||_inf / ||f||_2^2
double f_functional(const GridFunction& f, const GridFunction& fhat);
/// F_q(f) = ||f||_q ||f^||_q / ||f||_2^2
double fq_functional(const GridFunction& f, const GridFunction& fhat, NormIndex q);

struct FamilyResult {
  GridFunction f;
  GridFunction fhat;
  double f_numeric = 0.0;
  double f_closed = 0.0;
  double norm2_sq_numeric = 0.0;
  double norm2_sq_closed = 0.0;
  double transform_error = 0.0;  // vs the closed-form transform, relative to its peak
  InequalityReport report;       // Match of f_numeric against f_closed, tol 1e-3
};

/// f_{a,b}(x) = e^{-pi ((a+bi)x)^2}, a > b > 0. samples = 0 picks an odd
/// grid resolving both f and f^ (half-width 5/sqrt(a^2-b^2)).
FamilyResult family_fab(double a, double b, std::size_t samples = 0);
double family_fab_closed_form(double a, double b);

/// g_c = c^{-1/2} e^{-pi (x/c)^2} + c^{1/2} e^{-pi (cx)^2}, its own Fourier
/// transform. Uses the self-dual grid dx = 1/sqrt(n).
FamilyResult family_gc(double c, std::size_t samples = 0);
double family_gc_closed_form(double c);

struct CoverageRow {
  std::string family;
  double parameter = 0.0;
  double f_numeric = 0.0;
  double f_closed = 0.0;
  bool pass = false;
};

struct CoverageResult {
  std::vector<CoverageRow> rows;
  double min_value = 0.0;
  double max_value = 0.0;
  bool fab_monotone = false;  // decreasing in a along b = sqrt(a^2-1)
  bool gc_monotone = false;   // increasing in c >= 1
  InequalityReport report;    // pass iff every row matches, both monotone, span covers target
};

/// F over f_{a, sqrt(a^2-1)} for a_values and g_c for c_values; checks the
/// union of values spans [target_lo, target_hi].
CoverageResult f_coverage_sweep(const std::vector<double>& a_values,
                                const std::vector<double>& c_values, double target_lo = 0.05,
                                double target_hi = 20.0);

struct FqRow {
  std::string family;
  double parameter = 0.0;
  double value = 0.0;
};

/// Observed F_q values across both families; exploratory, no verdict.
std::vector<FqRow> fq_exploration(NormIndex q, const std::vector<double>& a_values,
                                  const std::vector<double>& c_values);

/// e^{-pi x^2}
Complex gaussian(double x);

/// Sum of 1-4 Gaussian bumps with random centers in [-2, 2], widths in
/// [0.3, 1.5] and complex weights, sampled on the symmetric grid.
GridFunction random_smooth_function(std::uint64_t seed, std::size_t n = 4096,
                                    double half_width = 8.0);

}  // namespace khup
