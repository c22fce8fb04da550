#pragma once

// Catalog of k-Hadamard matrices and the certifier for the defining
// property: entries bounded by 1 and ||(A*A)^-1||_{inf->inf} <= 1/k.

#include "khup/numerics.hpp"

#include <cstdint>
#include <vector>

namespace khup {

/// G = Z_{n1} x ... x Z_{nr}. Elements are indexed in mixed radix with the
/// last factor varying fastest: index(x) = sum_j x_j * prod_{l>j} n_l.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> cyclic_factors);

  const std::vector<int>& factors() const { return factors_; }
  std::size_t order() const { return order_; }

  std::vector<int> coordinates(std::size_t index) const;
  std::size_t index(const std::vector<int>& coords) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;

  /// True when the index set is closed under the group law and contains 0.
  bool is_subgroup(const std::vector<std::size_t>& elements) const;

 private:
  std::vector<int> factors_;
  std::size_t order_ = 1;
};

struct KHadamardCertificate {
  double k = 0.0;
  double entry_bound = 0.0;
  double unitary_defect = 0.0;    // ||A*A - kI||_{inf->inf} / k
  double gram_inverse_norm = 0.0; // ||(A*A)^-1||_{inf->inf}
  double condition_estimate = 0.0;
  bool is_unitary_scaled = false;
  bool singular = false;
  bool entry_bound_ok = false;
  double tol = 1e-9;

  /// Usable as a hypothesis for the uncertainty checks.
  bool certified() const { return !singular && entry_bound_ok && k > 0.0; }
};

/// Entry (chi, x) = conj(chi(x)) = prod_j w_{n_j}^{-x_j chi_j}. Row 0 is the
/// trivial character and column 0 the identity.
ComplexMatrix fourier_matrix(const FiniteAbelianGroup& g);

/// H_1^{(x)m} with H_1 = [[1,1],[-1,1]]; m <= 12.
ComplexMatrix sylvester_hadamard(int m);

/// Paley I Hadamard matrix of order q+1 for prime q = 3 (mod 4), q <= 997.
ComplexMatrix paley_hadamard(int q);

/// 2^n x n matrix whose rows run through {-1,1}^n (row r, column j is -1
/// iff bit j of r is set); n <= 16.
ComplexMatrix hadamard_code_matrix(int n);

/// Point/line incidence matrix of PG(2,q), q prime. Points and lines are
/// normalized homogeneous triples over Z_q (first nonzero coordinate 1)
/// listed in lexicographic order.
ComplexMatrix pg2_incidence(int q);

/// Haar orthogonal matrix (QR of a seeded Gaussian matrix with sign-fixed R
/// diagonal) rescaled so the largest entry modulus is exactly 1.
ComplexMatrix scaled_random_orthogonal(int n, std::uint64_t seed);

inline constexpr double kGramConditionLimit = 1e12;

KHadamardCertificate certify_k_hadamard(const ComplexMatrix& a, double tol = 1e-9);

bool is_prime(int q);

}  // namespace khup
