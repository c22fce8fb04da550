#pragma once

// Dense complex linear algebra shared by every check: Lp / operator /
// Schatten norms, exact and approximate supports, numerical rank.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace khup {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Raised when a factorization fails or a result is not trustworthy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Norm exponent p in [1, inf]. Infinity is a distinguished state, never a
/// large float, so limits like (p-1)/p -> 1 are taken algebraically.
class NormIndex {
 public:
  constexpr NormIndex() = default;
  explicit NormIndex(double p);

  static constexpr NormIndex infinity() {
    NormIndex n;
    n.p_ = 0.0;
    n.infinite_ = true;
    return n;
  }

  /// Parses "inf", "infinity" or a decimal number >= 1.
  static NormIndex parse(const std::string& text);

  constexpr bool is_infinite() const { return infinite_; }
  /// Finite exponent; throws for infinity.
  double value() const;
  /// 1/p, with 1/inf = 0.
  constexpr double reciprocal() const { return infinite_ ? 0.0 : 1.0 / p_; }
  /// (p-1)/p, the exponent that shows up all over the norm inequalities.
  constexpr double one_minus_reciprocal() const {
    return infinite_ ? 1.0 : (p_ - 1.0) / p_;
  }
  /// Hoelder conjugate p' = p/(p-1); 1' = inf, inf' = 1.
  NormIndex conjugate() const;

  std::string to_string() const;

  friend bool operator==(const NormIndex& a, const NormIndex& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.p_ == b.p_);
  }

 private:
  double p_ = 2.0;
  bool infinite_ = false;
};

inline const NormIndex kL1{1.0};
inline const NormIndex kL2{2.0};
inline const NormIndex kLinf = NormIndex::infinity();

struct SupportResult {
  std::vector<std::size_t> indices;  // sorted ascending
  std::size_t size = 0;
  double mass_excluded = 0.0;
  bool zero_input = false;  // set when v == 0; callers needing v != 0 reject
};

/// Throws std::invalid_argument if any entry is NaN/Inf or the vector is empty.
void require_finite(const ComplexVector& v, const char* what = "vector");
void require_finite(const ComplexMatrix& m, const char* what = "matrix");

double lp_norm(const ComplexVector& v, NormIndex p);
double lp_norm(std::span<const double> magnitudes, NormIndex p);

/// max |A_ij| (the 1 -> inf operator norm).
double op_norm_1_to_inf(const ComplexMatrix& a);
/// max row sum of |A_ij| (the inf -> inf operator norm).
double op_norm_inf_to_inf(const ComplexMatrix& a);

/// Singular values, descending. Throws NumericalError if the SVD produces
/// non-finite output.
RealVector singular_values(const ComplexMatrix& m);
double schatten_norm(const ComplexMatrix& m, NormIndex p);

/// Entries with |v_i| > tol * ||v||_inf. The zero vector yields an empty
/// result with zero_input set.
SupportResult support(const ComplexVector& v, double tol = 1e-9);

/// Smallest T with ||v[T^c]||_p <= eps ||v||_p. Entries enter T by
/// decreasing modulus, ties by ascending index.
SupportResult approx_support(const ComplexVector& v, NormIndex p, double eps);

/// Number of singular values above tol * sigma_max; 0 for the zero matrix.
std::size_t matrix_rank(const ComplexMatrix& m, double tol = 1e-10);

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

/// Relative slack used when comparing excluded mass against eps*||v||_p.
inline constexpr double kSupportMassSlack = 1e-12;

}  // namespace khup
