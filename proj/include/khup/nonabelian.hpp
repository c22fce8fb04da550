#pragma once

// Regular representation of C[G], its block diagonalization by the
// irrep Fourier matrix, rank-support and the non-abelian uncertainty checks.

#include "khup/group.hpp"
#include "khup/report.hpp"

#include <cstdint>

namespace khup {

/// f in C[G], one value per group element.
using GroupFunction = ComplexVector;

/// (T_f)_{z,y} = f(z y^-1): left multiplication by f in the delta basis.
ComplexMatrix regular_rep(const FiniteGroup& g, const GroupFunction& f);

/// (f * h)(x) = sum_u f(u) h(u^-1 x), so that T_{f*h} = T_f T_h.
GroupFunction convolve(const FiniteGroup& g, const GroupFunction& f, const GroupFunction& h);

/// c(i;j,k) with x-coordinate rho_i(x)_{jk}, ordered by (i, j, k).
std::vector<ComplexVector> matrix_entry_vectors(const FiniteGroup& g, const IrrepCatalog& irreps);

/// Rows indexed by elements, column (i;j,k) = sqrt(d_i) rho_i(x)_{jk}.
/// F*F = FF* = nI.
ComplexMatrix fourier_matrix_na(const FiniteGroup& g, const IrrepCatalog& irreps);

/// The conjugating matrix used for T_f: row (i;j,k) holds
/// sqrt(d_i) rho_i(y)_{kj}, i.e. a row permutation of F^T. With this
/// ordering P T_f P* is literally block diagonal, d_i consecutive copies of
/// n f^(rho_i) per irrep.
ComplexMatrix analysis_matrix(const FiniteGroup& g, const IrrepCatalog& irreps);

/// f^(rho) = sum_x f(x) rho(x).
ComplexMatrix fourier_coefficient(const Irrep& rho, const GroupFunction& f);

struct BlockDiagonal {
  std::vector<int> multiplicity;     // d_i
  std::vector<ComplexMatrix> blocks; // n f^(rho_i)
  std::size_t total = 0;
  double off_block_mass = 0.0;       // relative to the largest entry
  double block_mismatch = 0.0;       // vs the direct sum_x f(x) rho_i(x)
  ComplexMatrix assemble() const;
};

/// Conjugates T_f, checks the block pattern (off-block mass < 1e-8
/// relative) and compares every block against n f^(rho_i). Throws
/// NumericalError on a structure violation.
BlockDiagonal hat_Tf(const FiniteGroup& g, const IrrepCatalog& irreps, const GroupFunction& f);

/// Singular values of T_f above 1e-9 n ||f||_inf.
std::size_t rksupp(const FiniteGroup& g, const GroupFunction& f);
/// sum_i d_i rank f^(rho_i), same absolute threshold.
std::size_t rksupp_blocks(const FiniteGroup& g, const IrrepCatalog& irreps, const GroupFunction& f);

/// Nonzero entries of T^_f in the catalog basis: sum_i d_i |supp f^(rho_i)|.
/// An upper bound for min-support.
std::size_t catalog_basis_support(const FiniteGroup& g, const IrrepCatalog& irreps,
                                  const GroupFunction& f);

bool is_hermitian_function(const FiniteGroup& g, const GroupFunction& f, double tol = 1e-10);

/// Exact min-support for Hermitian f: eigenvalues of T_f above 1e-9 of the
/// largest. Throws std::invalid_argument for non-Hermitian f.
std::size_t minsupp_hermitian(const FiniteGroup& g, const GroupFunction& f);

struct Symmetrized {
  GroupFunction g;
  bool used_skew = false;  // f + f~ vanished, so i(f - f~) was used
};

/// g = f + conj f(x^-1). When that is zero (f skew-Hermitian) returns
/// i(f - conj f(x^-1)) instead; both are Hermitian.
Symmetrized symmetrize(const FiniteGroup& g, const GroupFunction& f);

/// |supp f| rksupp(f^) >= n
InequalityReport meshulam_check(const FiniteGroup& g, const GroupFunction& f,
                                double tol = 1e-9);

/// |supp f| |catalog-basis supp f^| >= n
InequalityReport min_support_up_check(const FiniteGroup& g, const IrrepCatalog& irreps,
                                      const GroupFunction& f, double tol = 1e-9);

/// |supp f| rksupp(f^) >= n/4 via the symmetrization chain. Context holds
/// the chain quantities; a failed intermediate step adds a note and fails
/// the report.
InequalityReport factor4_check(const FiniteGroup& g, const GroupFunction& f, double tol = 1e-9);

/// (||f||_1/||f||_inf)(||T_f||_S1/||T_f||_Sinf) >= n. Schatten norms come
/// from the SVD of T_f; with a catalog the block formula is cross-checked.
InequalityReport kuperberg_check(const FiniteGroup& g, const GroupFunction& f,
                                 const IrrepCatalog* irreps = nullptr, double tol = 1e-9);

struct N2Result {
  double recovery_residual = 0.0;  // max ||B(A T_f) - n^2 T_f||_max / n^2
  double forward_ratio = 0.0;      // max ||A T_f||_max / ||T_f||_1 (must be <= 1)
  double backward_ratio = 0.0;     // max ||B N||_max / ||N||_1 over N in U (<= 1)
  std::size_t trials = 0;
  InequalityReport report;         // AtMost on the worst contraction ratio
};

/// A M = P M P*, B N = P* N P with P = analysis_matrix. Over random f and
/// random block-diagonal N (d_i identical copies per irrep) checks
/// B(A T_f) = n^2 T_f, ||A T_f||_max <= ||T_f||_1, ||B N||_max <= ||N||_1.
N2Result n2_hadamard_check(const FiniteGroup& g, const IrrepCatalog& irreps, std::size_t trials,
                           std::uint64_t seed, double tol = 1e-9);

/// Random complex f with a random support pattern.
GroupFunction random_group_function(std::size_t n, std::uint64_t seed);

}  // namespace khup
