#pragma once

// Checkers for the finite-dimensional uncertainty inequalities of a
// certified k-Hadamard matrix. Every checker returns an InequalityReport;
// a failing AtLeast report on a certified input is a soundness bug.

#include "khup/khadamard.hpp"
#include "khup/numerics.hpp"
#include "khup/report.hpp"

#include <utility>

namespace khup {

inline constexpr double kRatioTol = 1e-9;
inline constexpr double kSupportTol = 1e-9;

/// ||v||_1 ||Av||_1 >= k ||v||_inf ||Av||_inf
InequalityReport primary_up_check(const ComplexMatrix& a, const KHadamardCertificate& cert,
                                  const ComplexVector& v, double tol = kRatioTol);

/// |supp v| |supp Av| >= k, supports taken with relative threshold.
InequalityReport support_up_check(const ComplexMatrix& a, const KHadamardCertificate& cert,
                                  const ComplexVector& v, double tol = kRatioTol,
                                  double support_tol = kSupportTol);

/// |supp^1_eps v| |supp^1_eta Av| >= k (1-eps)(1-eta)
InequalityReport approx_support_l1_check(const ComplexMatrix& a,
                                         const KHadamardCertificate& cert,
                                         const ComplexVector& v, double eps, double eta,
                                         double tol = kRatioTol);

/// |supp^2_eps v| |supp^2_eta Av| >= k (1-eps-eta)^2 (rhs clamped at 0).
/// Needs A square with A*A = kI.
InequalityReport approx_support_l2_check(const ComplexMatrix& a,
                                         const KHadamardCertificate& cert,
                                         const ComplexVector& v, double eps, double eta,
                                         double tol = kRatioTol);

/// |supp^1_{eps^2} v| >= |supp^2_eps v|
InequalityReport supp1_vs_supp2_check(const ComplexVector& v, double eps);

/// ||v||_1 ||Av||_1 >= k^{1-1/q} ||v||_q ||Av||_q
InequalityReport norm_up_check(const ComplexMatrix& a, const KHadamardCertificate& cert,
                               const ComplexVector& v, NormIndex q, double tol = kRatioTol);

/// ||Av||_{p'} <= k^{(p-1)/p} ||v||_p for 1 < p < 2, unitary-type A.
/// Reported as lhs = k^{(p-1)/p} ||v||_p, rhs = ||Av||_{p'}.
InequalityReport hausdorff_young_check(const ComplexMatrix& a,
                                       const KHadamardCertificate& cert,
                                       const ComplexVector& v, double p,
                                       double tol = kRatioTol);

/// ||v||_p ||Av||_p >= k^{(q-p)/(pq)} ||v||_q ||Av||_q for 1<p<2, p<=q<=p'.
InequalityReport norm_up_midrange_check(const ComplexMatrix& a,
                                        const KHadamardCertificate& cert,
                                        const ComplexVector& v, double p, NormIndex q,
                                        double tol = kRatioTol);

struct CounterexampleResult {
  ComplexVector v;
  double eigen_residual = 0.0;  // ||Av - sqrt(n) v||_inf
  InequalityReport report;      // AtMost, bound 2
};

/// v = (1 + sqrt n, 1, ..., 1) is an eigenvector of the Fourier matrix with
/// eigenvalue sqrt n, so ||v||_p ||Av||_p / (||v||_q ||Av||_q) <= 2 for p >= 2.
CounterexampleResult p_geq_2_counterexample(const FiniteAbelianGroup& g, NormIndex p,
                                            NormIndex q, double tol = kRatioTol);

/// Indicator vector of an index set.
ComplexVector indicator(std::size_t n, const std::vector<std::size_t>& elements);
ComplexVector harmonic_vector(std::size_t n);
ComplexVector delta_vector(std::size_t n, std::size_t at);

}  // namespace khup
