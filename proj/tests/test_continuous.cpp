#include "oracles.hpp"

#include "khup/continuous.hpp"
#include "khup/grid.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace khup;

namespace {

constexpr double kPi = std::numbers::pi;

GridFunction gauss(std::size_t n = 4096, double L = 8) { return sample(gaussian, n, L); }

double rel_err(const ComplexVector& a, const ComplexVector& b) {
  return (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Dft, DirectMatchesLongDoubleOracle) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (int n : {1, 2, 3, 7, 16, 31, 64, 100}) {
    ComplexVector v(n);
    for (auto& x : v) x = Complex(g(rng), g(rng));
    for (int sign : {-1, 1}) {
      const auto ref = oracle::centered_dft(v, sign);
      EXPECT_LT(rel_err(centered_dft(v, sign, DftMethod::Direct), ref), 1e-13) << n;
      EXPECT_LT(rel_err(centered_dft(v, sign, DftMethod::Fft), ref), 1e-13) << n;
    }
  }
}

TEST(Dft, ParallelDirectIsBitwiseSerial) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  ComplexVector v(257);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  EXPECT_EQ(centered_dft(v, -1, DftMethod::Direct), centered_dft(v, -1, DftMethod::DirectParallel));
}

TEST(Grid, SymmetricSampling) {
  const auto f = gauss(8, 2);
  EXPECT_DOUBLE_EQ(f.dx, 0.5);
  EXPECT_DOUBLE_EQ(f.x0, -1.75);
  EXPECT_TRUE(f.symmetric());
  EXPECT_THROW(sample(gaussian, 0, 1), std::invalid_argument);
}

TEST(Grid, AdaptiveDoubling) {
  auto slow = [](double x) { return Complex(1.0 / (1.0 + x * x), 0); };
  const auto s = sample_adaptive(slow, 256, 4, 1e-3);
  EXPECT_GT(s.doublings, 0);
  EXPECT_TRUE(s.converged);
  EXPECT_LT(s.tail_fraction, 1e-3);
  const auto g = sample_adaptive(gaussian);
  EXPECT_EQ(g.doublings, 0);
}

TEST(Ft, GaussianIsFixedPoint) {
  const auto f = gauss();
  const auto fh = ft_grid(f);
  ComplexVector expected(fh.samples.size());
  for (std::size_t j = 0; j < fh.size(); ++j) expected[static_cast<Eigen::Index>(j)] = gaussian(fh.x(j));
  EXPECT_LT(rel_err(fh.samples, expected), 1e-12);
}

TEST(Ft, ShiftedGaussianClosedForm) {
  const double s = 0.7;
  const auto f = sample([&](double x) { return gaussian(x - s); }, 2048, 8);
  const auto fh = ft_grid(f);
  double err = 0;
  for (std::size_t j = 0; j < fh.size(); ++j) {
    const double xi = fh.x(j);
    err = std::max(err, std::abs(fh.samples[static_cast<Eigen::Index>(j)] - gaussian(xi) * std::polar(1.0, -2 * kPi * s * xi)));
  }
  EXPECT_LT(err, 1e-12);
}

TEST(Ft, DoubleTransformReflectsAndPlancherel) {
  const auto f = random_smooth_function(7, 1024, 8);
  const auto ff = ft_grid(ft_grid(f));
  EXPECT_LT(rel_err(ff.samples, f.samples.reverse()), 1e-13);
  const auto fh = ft_grid(f);
  EXPECT_NEAR(grid_norm(fh, kL2), grid_norm(f, kL2), 1e-12 * grid_norm(f, kL2));
}

TEST(Lct, FourierSpecialCase) {
  const auto f = random_smooth_function(3, 512, 6);
  const auto l = lct_apply({0, 1, -1, 0}, f);
  const auto fh = ft_grid(f);
  EXPECT_NEAR(l.dx, fh.dx, 1e-15);
  EXPECT_LT(rel_err(l.samples, fh.samples * std::polar(1.0, -kPi / 4)), 1e-12);
}

TEST(Lct, InverseOnGrid) {
  const auto f = random_smooth_function(5, 1024, 8);
  for (LCTParams m : {LCTParams{1, 0.5, 0, 1}, LCTParams{2, 1, 1.5, 1.25}, LCTParams{0.5, -2, 0.25, 1}}) {
    const auto back = lct_apply(m.inverse(), lct_apply(m, f));
    EXPECT_LT(rel_err(back.samples, f.samples), 1e-10);
  }
}

TEST(Lct, ChirpClosedForm) {
  // Free propagation of e^{-pi x^2}: |L_M f(xi)|^2 = e^{-2 pi xi^2/(1+b^2)} / sqrt(1+b^2).
  const double b = 2;
  const auto l = lct_apply({1, b, 0, 1}, gauss(4096, 12));
  double err = 0;
  for (std::size_t j = 0; j < l.size(); ++j) {
    const double xi = l.x(j);
    const double mod2 = std::exp(-2 * kPi * xi * xi / (1 + b * b)) / std::sqrt(1 + b * b);
    err = std::max(err, std::abs(std::norm(l.samples[static_cast<Eigen::Index>(j)]) - mod2));
  }
  EXPECT_LT(err, 1e-10);
}

TEST(Lct, Validation) {
  EXPECT_THROW(LCTParams({1, 0, 0, 1}).validate(), std::invalid_argument);
  EXPECT_THROW(LCTParams({1, 1, 1, 1}).validate(), std::invalid_argument);
  EXPECT_THROW(GridOperator::parse("lct:1,2,3"), std::invalid_argument);
  EXPECT_EQ(GridOperator::parse("lct:1,2,0,1").k(), 2.0);
  EXPECT_TRUE(GridOperator::parse("ft").is_fourier());
}

TEST(Moments, GaussianClosedForms) {
  const auto f = gauss();
  const double n2 = 1 / std::sqrt(2.0);
  EXPECT_NEAR(variance(f), oracle::gaussian_moment(2), 1e-12);
  EXPECT_NEAR(moment(f, 4), oracle::gaussian_moment(4), 1e-12);
  // |x|^r is not smooth at 0 for odd or fractional r, so the Riemann sum converges algebraically.
  for (double r : {1.5, 3.0}) EXPECT_NEAR(moment(f, r), oracle::gaussian_moment(r), 1e-6 * oracle::gaussian_moment(r));
  EXPECT_NEAR(grid_norm(f, kL2) * grid_norm(f, kL2), n2, 1e-12);
  EXPECT_NEAR(grid_norm(f, kL1), 1.0, 1e-12);
  EXPECT_THROW(moment(f, 1.0), std::invalid_argument);
}

TEST(Constants, Closed) {
  EXPECT_DOUBLE_EQ(heisenberg_constant(kL2), std::pow(2.0, -12));
  EXPECT_DOUBLE_EQ(heisenberg_constant(kLinf), std::pow(2.0, -10));
  EXPECT_NEAR(moment_exponent(2, kL2), 0.25, 1e-15);
  EXPECT_NEAR(moment_exponent(3, kLinf), 0.25, 1e-15);
  EXPECT_NEAR(moment_constant(2, kL2), std::pow(2.0, -1.5), 1e-15);
  // r = 2 collapses the moment chain to the variance-product constant for every q.
  for (double q : {1.5, 2.0, 3.0, 8.0}) {
    const NormIndex qi(q);
    const double power = 2 * (3 * q - 2) / (q - 1);
    EXPECT_NEAR(std::pow(moment_constant(2, qi), power), heisenberg_constant(qi), 1e-12 * heisenberg_constant(qi));
  }
  EXPECT_NEAR(std::pow(moment_constant(2, kLinf), 6), heisenberg_constant(kLinf), 1e-15);
}

TEST(VarianceProduct, GaussianIsExtremal) {
  const auto f = gauss();
  const auto fh = ft_grid(f);
  const double n2 = grid_norm(f, kL2);
  EXPECT_NEAR(variance(f) * variance(fh) / std::pow(n2, 4) * 16 * kPi * kPi, 1.0, 1e-10);
  const auto r = heisenberg_q_check(f, GridOperator::fourier(), kL2);
  EXPECT_NEAR(r.ratio, 4096 / (16 * kPi * kPi), 1e-8);
}

TEST(VarianceProduct, MomentRatioConsistency) {
  const auto f = random_smooth_function(9);
  const auto op = GridOperator::fourier();
  const auto h = heisenberg_q_check(f, op, kL2);
  const auto m = moment_up_check(f, op, 2, 2, kL2);
  EXPECT_NEAR(std::pow(m.ratio, 4), h.ratio, 1e-9 * h.ratio);
}

TEST(GridChecks, RandomSmoothFunctionsPass) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto f = random_smooth_function(s);
    for (const auto& op : {GridOperator::fourier(), GridOperator::lct({1, 2, 0, 1}), GridOperator::lct({0, 0.5, -2, 0})}) {
      EXPECT_TRUE(primary_up_grid_check(f, op).pass);
      EXPECT_TRUE(support_measure_check(f, op).pass);
      for (double q : {1.5, 2.0, 4.0}) {
        EXPECT_TRUE(norm_up_grid_check(f, op, NormIndex(q)).pass);
        EXPECT_TRUE(heisenberg_q_check(f, op, NormIndex(q)).pass);
        EXPECT_TRUE(moment_up_check(f, op, 3, 2, NormIndex(q)).pass);
        EXPECT_TRUE(moment_up_corollary_check(f, op, 3, NormIndex(q)).pass);
      }
      EXPECT_TRUE(heisenberg_q_check(f, op, kLinf).pass);
    }
    EXPECT_TRUE(variance_ratio_bound_check(f, kL2).pass);
    EXPECT_TRUE(variance_ratio_bound_check(f, kLinf).pass);
  }
}

TEST(GridChecks, LctEntryBound) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto f = random_smooth_function(s + 100, 2048, 8);
    for (double b : {0.5, 1.0, 2.0}) {
      const auto l = lct_apply({1, b, 0, 1}, f);
      EXPECT_LE(grid_norm(l, kLinf), grid_norm(f, kL1) / std::sqrt(b) * (1 + 1e-12));
    }
  }
}

TEST(GridChecks, SupportMeasureSensitivity) {
  const auto r = support_measure_check(gauss(), GridOperator::fourier());
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.context.count("product_at_1e-4"));
  EXPECT_TRUE(r.context.count("product_at_1e-8"));
  EXPECT_LT(r.context.at("product_at_1e-4"), r.lhs);
  EXPECT_GT(r.context.at("product_at_1e-8"), r.lhs);
}

TEST(Families, FabClosedForm) {
  for (double a : {1.05, 1.2, 2.0, 5.0}) {
    const double b = std::sqrt(a * a - 1);
    const auto res = family_fab(a, b);
    EXPECT_NEAR(res.f_closed, oracle::fab_F(a, b), 1e-14);
    EXPECT_NEAR(res.f_numeric, std::sqrt(2 / (2 * a * a - 1)), 1e-3 * res.f_closed);
    EXPECT_NEAR(res.norm2_sq_numeric, res.norm2_sq_closed, 1e-8 * res.norm2_sq_closed);
    EXPECT_LT(res.transform_error, 1e-8);
    EXPECT_TRUE(res.report.pass);
  }
  EXPECT_THROW(family_fab(1, 2), std::invalid_argument);
}

TEST(Families, GcClosedForm) {
  for (double c : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const auto res = family_gc(c);
    EXPECT_NEAR(res.f_closed, oracle::gc_F(c), 1e-12 * res.f_closed);
    EXPECT_NEAR(res.f_numeric, res.f_closed, 1e-3 * res.f_closed);
    EXPECT_LT(res.transform_error, 1e-8);
  }
  EXPECT_NEAR(family_gc(1).f_numeric, std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(family_gc(0.25).f_numeric, family_gc(4).f_numeric, 1e-9);
}

TEST(Families, CoverageAndExploration) {
  const auto cov = f_coverage_sweep({1.05, 2, 5, 25}, {1, 5, 30});
  EXPECT_TRUE(cov.report.pass);
  EXPECT_LT(cov.min_value, 0.05);
  EXPECT_GT(cov.max_value, 20);
  EXPECT_TRUE(cov.fab_monotone);
  EXPECT_TRUE(cov.gc_monotone);
  EXPECT_FALSE(f_coverage_sweep({1.05, 2}, {1, 5}).report.pass);
  const auto rows = fq_exploration(NormIndex(4), {1.5, 3}, {1, 4});
  EXPECT_EQ(rows.size(), 4u);
  for (const auto& r : rows) EXPECT_GT(r.value, 0);
}
