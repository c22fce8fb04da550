#include "oracles.hpp"

#include "khup/finite_up.hpp"
#include "khup/parallel.hpp"
#include "khup/search.hpp"

#include <gtest/gtest.h>

using namespace khup;

namespace {

struct Op {
  ComplexMatrix a;
  KHadamardCertificate cert;
};

Op fourier(std::vector<int> f) {
  Op o{fourier_matrix(FiniteAbelianGroup(std::move(f))), {}};
  o.cert = certify_k_hadamard(o.a);
  return o;
}

std::vector<std::size_t> progression(int n, int d) {
  std::vector<std::size_t> out;
  for (int i = 0; i < n; i += d) out.push_back(static_cast<std::size_t>(i));
  return out;
}

}  // namespace

TEST(PrimaryUp, DeltaIsTight) {
  const auto o = fourier({7});
  const auto r = primary_up_check(o.a, o.cert, delta_vector(7, 3));
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.ratio, 1.0, 1e-12);
}

TEST(PrimaryUp, ValuesFromOracle) {
  const auto o = fourier({9});
  std::mt19937_64 rng(4);
  const auto v = random_gaussian_vector(9, rng);
  const ComplexVector av = oracle::dft(9) * v;
  const auto r = primary_up_check(o.a, o.cert, v);
  EXPECT_NEAR(r.lhs, oracle::pnorm(v, 1) * oracle::pnorm(av, 1), 1e-10 * r.lhs);
  EXPECT_NEAR(r.rhs, 9 * oracle::pnorm(v, INFINITY) * oracle::pnorm(av, INFINITY), 1e-10 * r.rhs);
}

TEST(PrimaryUp, RejectsUncertifiedAndBadShapes) {
  const auto o = fourier({4});
  EXPECT_THROW(primary_up_check(o.a, o.cert, ComplexVector::Ones(5)), std::invalid_argument);
  EXPECT_THROW(primary_up_check(o.a, o.cert, ComplexVector::Zero(4)), std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Identity(4, 4) * 3.0;
  EXPECT_THROW(primary_up_check(bad, certify_k_hadamard(bad), ComplexVector::Ones(4)), std::invalid_argument);
}

TEST(SupportUp, SubgroupIndicatorsAreTight) {
  for (int n : {4, 6, 8, 9, 12, 30}) {
    const auto o = fourier({n});
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      const auto r = support_up_check(o.a, o.cert, indicator(n, progression(n, d)));
      EXPECT_TRUE(r.pass);
      EXPECT_EQ(r.lhs, n) << n << " " << d;
    }
  }
}

TEST(SupportUp, ProductGroupSubgroup) {
  const auto o = fourier({2, 2, 3});
  const auto r = support_up_check(o.a, o.cert, indicator(12, {0, 3}));
  EXPECT_EQ(r.lhs, 12);
  EXPECT_TRUE(r.pass);
}

TEST(ApproxSupport, L1AndL2) {
  const auto o = fourier({16});
  const auto v = indicator(16, progression(16, 4));
  const auto r1 = approx_support_l1_check(o.a, o.cert, v, 0.1, 0.2);
  EXPECT_TRUE(r1.pass);
  EXPECT_NEAR(r1.rhs, 16 * 0.9 * 0.8, 1e-9);
  const auto r2 = approx_support_l2_check(o.a, o.cert, v, 0.1, 0.2);
  EXPECT_TRUE(r2.pass);
  EXPECT_NEAR(r2.rhs, 16 * 0.7 * 0.7, 1e-9);
  EXPECT_THROW(approx_support_l1_check(o.a, o.cert, v, 1.5, 0.1), std::invalid_argument);
}

TEST(ApproxSupport, L2NeedsUnitaryType) {
  const auto a = pg2_incidence(2);
  EXPECT_THROW(approx_support_l2_check(a, certify_k_hadamard(a), ComplexVector::Ones(7), 0.1, 0.1),
               std::invalid_argument);
}

TEST(Supp1VsSupp2, HarmonicVector) {
  // supp^1_{eps^2} grows like n^{1-eps^2}, much faster than supp^2_eps.
  const double eps = 0.3;
  const auto small = supp1_vs_supp2_check(harmonic_vector(1000), eps);
  const auto large = supp1_vs_supp2_check(harmonic_vector(100000), eps);
  EXPECT_TRUE(small.pass);
  EXPECT_TRUE(large.pass);
  const double slope = std::log(large.lhs / small.lhs) / std::log(100.0);
  EXPECT_GT(slope, 0.8);
  EXPECT_LT(large.rhs, 20);
}

TEST(NormUp, SubgroupIsTightForEveryQ) {
  const auto o = fourier({12});
  const auto v = indicator(12, progression(12, 3));
  for (double q : {1.0, 1.5, 2.0, 4.0}) {
    const auto r = norm_up_check(o.a, o.cert, v, NormIndex(q));
    EXPECT_NEAR(r.ratio, 1.0, 1e-12) << q;
  }
  EXPECT_NEAR(norm_up_check(o.a, o.cert, v, kLinf).ratio, 1.0, 1e-12);
}

TEST(LpDuality, PassesAndValidates) {
  const auto o = fourier({8});
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto v = random_test_vector(8, rng);
    EXPECT_TRUE(hausdorff_young_check(o.a, o.cert, v, 1.25).pass);
    EXPECT_TRUE(norm_up_midrange_check(o.a, o.cert, v, 1.25, NormIndex(2)).pass);
  }
  const auto v = ComplexVector::Ones(8);
  EXPECT_THROW(hausdorff_young_check(o.a, o.cert, v, 2.0), std::invalid_argument);
  EXPECT_THROW(norm_up_midrange_check(o.a, o.cert, v, 1.5, NormIndex(4)), std::invalid_argument);
  EXPECT_THROW(norm_up_midrange_check(o.a, o.cert, v, 1.5, kLinf), std::invalid_argument);
}

TEST(Counterexample, ClosedFormRatio) {
  for (int n : {4, 9, 16, 64, 100}) {
    const auto res = p_geq_2_counterexample(FiniteAbelianGroup({n}), kL2, kLinf);
    const double rn = std::sqrt(static_cast<double>(n));
    EXPECT_LT(res.eigen_residual, 1e-10 * n);
    EXPECT_NEAR(res.report.ratio, 2 * rn / (1 + rn), 1e-12);
    EXPECT_TRUE(res.report.pass);
    EXPECT_EQ(res.report.relation, Relation::AtMost);
  }
  EXPECT_THROW(p_geq_2_counterexample(FiniteAbelianGroup({4}), NormIndex(1.5), kLinf), std::invalid_argument);
}

TEST(Counterexample, GroupProducts) {
  const auto res = p_geq_2_counterexample(FiniteAbelianGroup({2, 2, 4}), NormIndex(3), NormIndex(5));
  EXPECT_LT(res.eigen_residual, 1e-12);
  EXPECT_TRUE(res.report.pass);
}

TEST(Search, FindsTightVectorOnZ12) {
  const auto o = fourier({12});
  const auto res = extremal_search(o.a, o.cert, SearchObjective::SupportProduct);
  EXPECT_NEAR(res.report.ratio, 1.0, 1e-9);
  EXPECT_LE(res.evaluations, 2000);
}

TEST(Search, L1ObjectiveOnSylvester) {
  const auto h = sylvester_hadamard(3);
  const auto cert = certify_k_hadamard(h);
  SearchOptions opt;
  opt.budget = 500;
  const auto res = extremal_search(h, cert, SearchObjective::L1RatioProduct, opt);
  EXPECT_TRUE(res.report.pass);
  EXPECT_NEAR(res.report.ratio, 1.0, 1e-9);
  EXPECT_LE(res.evaluations, 500);
}

TEST(Search, Validation) {
  const auto o = fourier({4});
  SearchOptions opt;
  opt.budget = 0;
  EXPECT_THROW(extremal_search(o.a, o.cert, SearchObjective::SupportProduct, opt), std::invalid_argument);
  EXPECT_THROW(parse_objective("nope"), std::invalid_argument);
  EXPECT_EQ(parse_objective("approx_support"), SearchObjective::ApproxSupport);
}

TEST(Search, DeterministicForSeed) {
  const auto o = fourier({10});
  SearchOptions opt;
  opt.budget = 300;
  opt.seed = 9;
  const auto a = extremal_search(o.a, o.cert, SearchObjective::ApproxSupport, opt);
  const auto b = extremal_search(o.a, o.cert, SearchObjective::ApproxSupport, opt);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.origin, b.origin);
}
