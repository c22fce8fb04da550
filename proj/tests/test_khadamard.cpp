#include "oracles.hpp"

#include "khup/khadamard.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace khup;

namespace {

ComplexMatrix pg2_gram_inverse(int q) {
  const int n = q * q + q + 1;
  ComplexMatrix m = ComplexMatrix::Identity(n, n) - ComplexMatrix::Constant(n, n, 1.0 / (q + n));
  return m / q;
}

}  // namespace

TEST(AbelianGroup, MixedRadix) {
  FiniteAbelianGroup g({2, 3});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.index({1, 2}), 5u);
  EXPECT_EQ(g.coordinates(4), (std::vector<int>{1, 1}));
  for (std::size_t a = 0; a < 6; ++a) {
    EXPECT_EQ(g.add(a, g.negate(a)), 0u);
    for (std::size_t b = 0; b < 6; ++b) EXPECT_EQ(g.add(a, b), g.add(b, a));
  }
  EXPECT_TRUE(g.is_subgroup({0, 3}));
  EXPECT_TRUE(g.is_subgroup({0, 1, 2}));
  EXPECT_FALSE(g.is_subgroup({0, 1}));
  EXPECT_FALSE(g.is_subgroup({3}));
  EXPECT_EQ(FiniteAbelianGroup({}).order(), 1u);
  EXPECT_THROW(FiniteAbelianGroup({1, 2}), std::invalid_argument);
  EXPECT_THROW(FiniteAbelianGroup({0, 2}), std::invalid_argument);
}

TEST(Fourier, CyclicEntries) {
  for (int n : {2, 5, 12}) {
    const auto f = fourier_matrix(FiniteAbelianGroup({n}));
    EXPECT_LT((f - oracle::dft(n)).cwiseAbs().maxCoeff(), 1e-12) << n;
  }
}

TEST(Fourier, ProductIsTensor) {
  const auto f = fourier_matrix(FiniteAbelianGroup({2, 3, 4}));
  const ComplexMatrix t = kronecker(kronecker(oracle::dft(2), oracle::dft(3)), oracle::dft(4));
  EXPECT_LT((f - t).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Certify, FourierIsN) {
  for (int n = 2; n <= 20; ++n) {
    const auto c = certify_k_hadamard(fourier_matrix(FiniteAbelianGroup({n})));
    EXPECT_NEAR(c.k, n, 1e-9 * n);
    EXPECT_TRUE(c.is_unitary_scaled);
    EXPECT_TRUE(c.certified());
  }
}

TEST(Certify, Pg2AgainstClosedFormInverse) {
  for (int q : {2, 3, 5, 7}) {
    const auto a = pg2_incidence(q);
    const int n = q * q + q + 1;
    ASSERT_EQ(a.rows(), n);
    // Each line has q+1 points, two points share one line.
    const ComplexMatrix gram = a.adjoint() * a;
    const ComplexMatrix expected = q * ComplexMatrix::Identity(n, n) + ComplexMatrix::Ones(n, n);
    EXPECT_LT((gram - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((gram * pg2_gram_inverse(q) - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
    const double k_oracle = 1.0 / oracle::inf_inf_norm(pg2_gram_inverse(q));
    const auto c = certify_k_hadamard(a);
    EXPECT_NEAR(c.k, k_oracle, 1e-9 * k_oracle) << q;
    EXPECT_GE(c.k, q / 2.0);
    EXPECT_FALSE(c.is_unitary_scaled);
  }
  EXPECT_NEAR(certify_k_hadamard(pg2_incidence(2)).k, 9.0 / 7.0, 1e-12);
  EXPECT_THROW(pg2_incidence(4), std::invalid_argument);
}

TEST(Certify, Sylvester) {
  for (int m = 0; m <= 6; ++m) {
    const auto h = sylvester_hadamard(m);
    const int n = 1 << m;
    EXPECT_EQ(h.cwiseAbs().maxCoeff(), 1.0);
    EXPECT_LT((h * h.adjoint() - n * ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(certify_k_hadamard(h).k, n, 1e-9 * n);
  }
}

TEST(Certify, Paley) {
  for (int q : {3, 7, 11, 19, 23}) {
    const auto h = paley_hadamard(q);
    const int n = q + 1;
    for (auto x : h.reshaped()) EXPECT_EQ(std::abs(x), 1.0);
    EXPECT_LT((h * h.adjoint() - n * ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(certify_k_hadamard(h).k, n, 1e-9 * n);
  }
  EXPECT_THROW(paley_hadamard(5), std::invalid_argument);
}

TEST(Certify, HadamardCode) {
  for (int n = 1; n <= 8; ++n) {
    const auto a = hadamard_code_matrix(n);
    ASSERT_EQ(a.rows(), 1 << n);
    std::set<std::vector<double>> rows;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      std::vector<double> row;
      for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(a(r, c).real());
      rows.insert(row);
    }
    EXPECT_EQ(rows.size(), static_cast<std::size_t>(1 << n));
    EXPECT_NEAR(certify_k_hadamard(a).k, 1 << n, 1e-9 * (1 << n));
  }
}

TEST(Certify, RandomOrthogonal) {
  const auto a = scaled_random_orthogonal(32, 5);
  EXPECT_DOUBLE_EQ(a.cwiseAbs().maxCoeff(), 1.0);
  const ComplexMatrix g = a.adjoint() * a;
  const double s = g(0, 0).real();
  EXPECT_LT((g - s * ComplexMatrix::Identity(32, 32)).cwiseAbs().maxCoeff(), 1e-10 * s);
  const auto c = certify_k_hadamard(a);
  EXPECT_NEAR(c.k, s, 1e-9 * s);
  EXPECT_EQ(a, scaled_random_orthogonal(32, 5));
  EXPECT_NE(a, scaled_random_orthogonal(32, 6));
}

TEST(Certify, RejectsBadInputs) {
  ComplexMatrix big = ComplexMatrix::Identity(3, 3) * 2.0;
  EXPECT_FALSE(certify_k_hadamard(big).certified());
  ComplexMatrix singular = ComplexMatrix::Ones(3, 3);
  const auto c = certify_k_hadamard(singular);
  EXPECT_TRUE(c.singular);
  EXPECT_FALSE(c.certified());
  ComplexMatrix nan = ComplexMatrix::Identity(2, 2);
  nan(0, 1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(certify_k_hadamard(nan), std::invalid_argument);
}

TEST(Certify, NonUnitaryGeneric) {
  // k from the definition on a small real matrix with explicit inverse.
  ComplexMatrix a(2, 2);
  a << 1, 0.5, 0, 1;
  const ComplexMatrix gram = a.adjoint() * a;
  const double k = 1.0 / oracle::inf_inf_norm(gram.inverse());
  EXPECT_NEAR(certify_k_hadamard(a).k, k, 1e-12);
}
