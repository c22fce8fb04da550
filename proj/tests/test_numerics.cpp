#include "oracles.hpp"

#include "khup/numerics.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace khup;

TEST(NormIndex, ConjugatesAndParsing) {
  EXPECT_TRUE(kL1.conjugate().is_infinite());
  EXPECT_EQ(kLinf.conjugate(), kL1);
  EXPECT_DOUBLE_EQ(NormIndex(1.5).conjugate().value(), 3.0);
  EXPECT_DOUBLE_EQ(NormIndex(2).conjugate().value(), 2.0);
  EXPECT_TRUE(NormIndex::parse("inf").is_infinite());
  EXPECT_DOUBLE_EQ(NormIndex::parse("4").value(), 4.0);
  EXPECT_DOUBLE_EQ(kLinf.one_minus_reciprocal(), 1.0);
  EXPECT_THROW(NormIndex(0.5), std::invalid_argument);
  EXPECT_THROW(NormIndex::parse("abc"), std::invalid_argument);
}

TEST(Norms, HandComputed) {
  ComplexVector v(2);
  v << 3.0, Complex(0, 4);
  EXPECT_DOUBLE_EQ(lp_norm(v, kL1), 7.0);
  EXPECT_DOUBLE_EQ(lp_norm(v, kL2), 5.0);
  EXPECT_DOUBLE_EQ(lp_norm(v, kLinf), 4.0);
  EXPECT_NEAR(lp_norm(v, NormIndex(3)), std::cbrt(91.0), 1e-14);
}

TEST(Norms, RandomAgainstOracle) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    ComplexVector v(17);
    for (auto& x : v) x = Complex(g(rng), g(rng));
    for (double p : {1.0, 1.3, 2.0, 3.5, 7.0}) {
      EXPECT_NEAR(lp_norm(v, NormIndex(p)), oracle::pnorm(v, p), 1e-12 * oracle::pnorm(v, p));
    }
  }
}

TEST(Norms, RejectsNonFinite) {
  ComplexVector v = ComplexVector::Ones(3);
  v[1] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(require_finite(v), std::invalid_argument);
  EXPECT_THROW(require_finite(ComplexVector()), std::invalid_argument);
}

TEST(OperatorNorms, MatchOracle) {
  ComplexMatrix m = ComplexMatrix::Random(5, 7);
  EXPECT_NEAR(op_norm_inf_to_inf(m), oracle::inf_inf_norm(m), 1e-13);
  EXPECT_NEAR(op_norm_1_to_inf(m), m.cwiseAbs().maxCoeff(), 0);
}

TEST(Svd, KnownSingularValues) {
  ComplexMatrix a(2, 2);
  a << 3, 0, 4, 5;
  const auto s = singular_values(a);
  EXPECT_NEAR(s[0], std::sqrt(45.0), 1e-12);
  EXPECT_NEAR(s[1], std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(schatten_norm(a, kL1), std::sqrt(45.0) + std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(schatten_norm(a, kL2), 5 * std::sqrt(2.0), 1e-12);  // Frobenius
  EXPECT_NEAR(schatten_norm(a, kLinf), std::sqrt(45.0), 1e-12);
}

TEST(Svd, LargeMatrixFrobenius) {
  ComplexMatrix a = ComplexMatrix::Random(90, 80);
  EXPECT_NEAR(schatten_norm(a, kL2), a.norm(), 1e-10 * a.norm());
}

TEST(Rank, LowRankProducts) {
  for (int r : {1, 3, 6}) {
    ComplexMatrix m = ComplexMatrix::Random(10, r) * ComplexMatrix::Random(r, 12);
    EXPECT_EQ(matrix_rank(m), static_cast<std::size_t>(r));
  }
  EXPECT_EQ(matrix_rank(ComplexMatrix::Zero(4, 4)), 0u);
}

TEST(Support, Threshold) {
  ComplexVector v(5);
  v << 1.0, 1e-12, 0.0, -0.5, Complex(0, 1e-3);
  const auto s = support(v);
  EXPECT_EQ(s.size, 3u);
  EXPECT_EQ(s.indices, (std::vector<std::size_t>{0, 3, 4}));
  EXPECT_TRUE(support(ComplexVector::Zero(3)).zero_input);
}

TEST(ApproxSupport, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(11);
  std::exponential_distribution<double> e(1.0);
  for (int t = 0; t < 40; ++t) {
    const int n = 4 + t % 8;
    ComplexVector v(n);
    for (auto& x : v) x = std::polar(std::pow(e(rng), 2.0), 6.28 * e(rng));
    for (double p : {1.0, 2.0}) {
      for (double eps : {0.0, 0.05, 0.2, 0.5, 0.9}) {
        EXPECT_EQ(approx_support(v, NormIndex(p), eps).size, oracle::brute_approx_support(v, p, eps))
            << "n=" << n << " p=" << p << " eps=" << eps;
      }
    }
  }
}

TEST(ApproxSupport, EpsOneIsEmpty) {
  EXPECT_EQ(approx_support(ComplexVector::Ones(5), kL1, 1.0).size, 0u);
}

TEST(Kronecker, Definition) {
  ComplexMatrix a = ComplexMatrix::Random(2, 3), b = ComplexMatrix::Random(3, 2);
  const auto k = kronecker(a, b);
  ASSERT_EQ(k.rows(), 6);
  ASSERT_EQ(k.cols(), 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 2; ++c) EXPECT_EQ(k(i * 3 + r, j * 2 + c), a(i, j) * b(r, c));
}
