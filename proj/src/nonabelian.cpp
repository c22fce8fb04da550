#include "khup/nonabelian.hpp"

#include "khup/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>
#include <stdexcept>

namespace khup {

namespace {

void require_length(const FiniteGroup& g, const GroupFunction& f, const char* who) {
  if (static_cast<std::size_t>(f.size()) != g.order()) {
    throw std::invalid_argument(std::string(who) + ": function length " + std::to_string(f.size()) +
                                " != group order " + std::to_string(g.order()));
  }
  require_finite(f, who);
}

void require_nonzero(const GroupFunction& f, const char* who) {
  if (f.cwiseAbs().maxCoeff() == 0.0) throw std::invalid_argument(std::string(who) + ": zero function");
}

double rank_threshold(const FiniteGroup& g, const GroupFunction& f) {
  return 1e-9 * static_cast<double>(g.order()) * f.cwiseAbs().maxCoeff();
}

std::size_t count_above(const RealVector& s, double thr) {
  std::size_t r = 0;
  for (double x : s)
    if (x > thr) ++r;
  return r;
}

}  // namespace

ComplexMatrix regular_rep(const FiniteGroup& g, const GroupFunction& f) {
  require_length(g, f, "regular_rep");
  const std::size_t n = g.order();
  ComplexMatrix t(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      t(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(y)) =
          f[static_cast<Eigen::Index>(g.mul(z, g.inverse(y)))];
  return t;
}

GroupFunction convolve(const FiniteGroup& g, const GroupFunction& f, const GroupFunction& h) {
  require_length(g, f, "convolve");
  require_length(g, h, "convolve");
  const std::size_t n = g.order();
  GroupFunction out = GroupFunction::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t u = 0; u < n; ++u) {
    const Complex fu = f[static_cast<Eigen::Index>(u)];
    if (fu == 0.0) continue;
    for (std::size_t y = 0; y < n; ++y)
      out[static_cast<Eigen::Index>(g.mul(u, y))] += fu * h[static_cast<Eigen::Index>(y)];
  }
  return out;
}

std::vector<ComplexVector> matrix_entry_vectors(const FiniteGroup& g, const IrrepCatalog& irreps) {
  const auto n = static_cast<Eigen::Index>(g.order());
  std::vector<ComplexVector> out;
  for (const auto& r : irreps.reps())
    for (int j = 0; j < r.dim; ++j)
      for (int k = 0; k < r.dim; ++k) {
        ComplexVector c(n);
        for (Eigen::Index x = 0; x < n; ++x) c[x] = r.matrices[static_cast<std::size_t>(x)](j, k);
        out.push_back(std::move(c));
      }
  return out;
}

ComplexMatrix fourier_matrix_na(const FiniteGroup& g, const IrrepCatalog& irreps) {
  const auto n = static_cast<Eigen::Index>(g.order());
  ComplexMatrix f(n, n);
  Eigen::Index col = 0;
  for (const auto& r : irreps.reps()) {
    const double s = std::sqrt(static_cast<double>(r.dim));
    for (int j = 0; j < r.dim; ++j)
      for (int k = 0; k < r.dim; ++k, ++col)
        for (Eigen::Index x = 0; x < n; ++x) f(x, col) = s * r.matrices[static_cast<std::size_t>(x)](j, k);
  }
  return f;
}

ComplexMatrix analysis_matrix(const FiniteGroup& g, const IrrepCatalog& irreps) {
  const auto n = static_cast<Eigen::Index>(g.order());
  ComplexMatrix p(n, n);
  Eigen::Index row = 0;
  for (const auto& r : irreps.reps()) {
    const double s = std::sqrt(static_cast<double>(r.dim));
    for (int j = 0; j < r.dim; ++j)
      for (int k = 0; k < r.dim; ++k, ++row)
        for (Eigen::Index y = 0; y < n; ++y) p(row, y) = s * r.matrices[static_cast<std::size_t>(y)](k, j);
  }
  return p;
}

ComplexMatrix fourier_coefficient(const Irrep& rho, const GroupFunction& f) {
  ComplexMatrix m = ComplexMatrix::Zero(rho.dim, rho.dim);
  for (std::size_t x = 0; x < rho.matrices.size(); ++x) m += f[static_cast<Eigen::Index>(x)] * rho.matrices[x];
  return m;
}

ComplexMatrix BlockDiagonal::assemble() const {
  const auto n = static_cast<Eigen::Index>(total);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  Eigen::Index at = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Eigen::Index d = blocks[i].rows();
    for (int c = 0; c < multiplicity[i]; ++c, at += d) m.block(at, at, d, d) = blocks[i];
  }
  return m;
}

BlockDiagonal hat_Tf(const FiniteGroup& g, const IrrepCatalog& irreps, const GroupFunction& f) {
  require_length(g, f, "hat_Tf");
  const double n = static_cast<double>(g.order());
  const ComplexMatrix p = analysis_matrix(g, irreps);
  const ComplexMatrix hat = p * regular_rep(g, f) * p.adjoint();

  BlockDiagonal out;
  out.total = g.order();
  ComplexMatrix mask = hat;
  Eigen::Index at = 0;
  for (const auto& r : irreps.reps()) {
    const ComplexMatrix expected = n * fourier_coefficient(r, f);
    out.multiplicity.push_back(r.dim);
    out.blocks.push_back(hat.block(at, at, r.dim, r.dim));
    for (int c = 0; c < r.dim; ++c, at += r.dim) {
      out.block_mismatch =
          std::max(out.block_mismatch, (hat.block(at, at, r.dim, r.dim) - expected).cwiseAbs().maxCoeff());
      mask.block(at, at, r.dim, r.dim).setZero();
    }
  }
  const double scale = std::max(hat.cwiseAbs().maxCoeff(), n * f.cwiseAbs().maxCoeff());
  if (scale > 0) {
    out.off_block_mass = mask.cwiseAbs().maxCoeff() / scale;
    out.block_mismatch /= scale;
  }
  if (out.off_block_mass > 1e-8 || out.block_mismatch > 1e-8) {
    throw NumericalError("hat_Tf: conjugated T_f is not block diagonal (off-block " +
                         std::to_string(out.off_block_mass) + ", block mismatch " +
                         std::to_string(out.block_mismatch) + "); irrep catalog is inconsistent");
  }
  return out;
}

std::size_t rksupp(const FiniteGroup& g, const GroupFunction& f) {
  require_length(g, f, "rksupp");
  if (f.cwiseAbs().maxCoeff() == 0.0) return 0;
  return count_above(singular_values(regular_rep(g, f)), rank_threshold(g, f));
}

std::size_t rksupp_blocks(const FiniteGroup& g, const IrrepCatalog& irreps, const GroupFunction& f) {
  require_length(g, f, "rksupp_blocks");
  if (f.cwiseAbs().maxCoeff() == 0.0) return 0;
  // Singular values of T_f are those of the f^(rho_i), each repeated d_i times.
  const double thr = rank_threshold(g, f);
  std::size_t total = 0;
  for (const auto& r : irreps.reps())
    total += static_cast<std::size_t>(r.dim) * count_above(singular_values(fourier_coefficient(r, f)), thr);
  return total;
}

std::size_t catalog_basis_support(const FiniteGroup& g, const IrrepCatalog& irreps,
                                  const GroupFunction& f) {
  require_length(g, f, "catalog_basis_support");
  const double thr = rank_threshold(g, f);
  std::size_t total = 0;
  for (const auto& r : irreps.reps()) {
    const ComplexMatrix m = fourier_coefficient(r, f);
    std::size_t nnz = 0;
    for (Eigen::Index i = 0; i < m.size(); ++i)
      if (std::abs(m.data()[i]) > thr) ++nnz;
    total += static_cast<std::size_t>(r.dim) * nnz;
  }
  return total;
}

bool is_hermitian_function(const FiniteGroup& g, const GroupFunction& f, double tol) {
  require_length(g, f, "is_hermitian_function");
  const double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Complex a = f[static_cast<Eigen::Index>(x)];
    const Complex b = std::conj(f[static_cast<Eigen::Index>(g.inverse(x))]);
    if (std::abs(a - b) > tol * scale) return false;
  }
  return true;
}

std::size_t minsupp_hermitian(const FiniteGroup& g, const GroupFunction& f) {
  if (!is_hermitian_function(g, f)) {
    throw std::invalid_argument(
        "minsupp_hermitian: f is not Hermitian (f(x) != conj f(x^-1)); use symmetrize first");
  }
  if (f.cwiseAbs().maxCoeff() == 0.0) return 0;
  ComplexMatrix t = regular_rep(g, f);
  t = 0.5 * (t + t.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(t, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("minsupp_hermitian: eigensolver failed");
  const RealVector lam = es.eigenvalues().cwiseAbs();
  return count_above(lam, 1e-9 * lam.maxCoeff());
}

Symmetrized symmetrize(const FiniteGroup& g, const GroupFunction& f) {
  require_length(g, f, "symmetrize");
  const auto n = static_cast<Eigen::Index>(g.order());
  GroupFunction reflected(n);
  for (Eigen::Index x = 0; x < n; ++x)
    reflected[x] = std::conj(f[static_cast<Eigen::Index>(g.inverse(static_cast<std::size_t>(x)))]);
  Symmetrized out;
  out.g = f + reflected;
  const double peak = f.cwiseAbs().maxCoeff();
  if (peak > 0 && out.g.cwiseAbs().maxCoeff() <= 1e-12 * peak) {
    out.g = Complex(0.0, 1.0) * (f - reflected);
    out.used_skew = true;
  }
  return out;
}

InequalityReport meshulam_check(const FiniteGroup& g, const GroupFunction& f, double tol) {
  require_length(g, f, "meshulam_check");
  require_nonzero(f, "meshulam_check");
  const std::size_t s = support(f).size;
  const std::size_t rk = rksupp(g, f);
  auto r = make_report("meshulam", static_cast<double>(s * rk), static_cast<double>(g.order()), tol);
  r.context["n"] = static_cast<double>(g.order());
  r.context["supp_f"] = static_cast<double>(s);
  r.context["rksupp"] = static_cast<double>(rk);
  return r;
}

InequalityReport min_support_up_check(const FiniteGroup& g, const IrrepCatalog& irreps,
                                      const GroupFunction& f, double tol) {
  require_length(g, f, "min_support_up_check");
  require_nonzero(f, "min_support_up_check");
  const std::size_t s = support(f).size;
  const std::size_t cs = catalog_basis_support(g, irreps, f);
  auto r = make_report("min-support-up", static_cast<double>(s * cs), static_cast<double>(g.order()), tol);
  r.context["n"] = static_cast<double>(g.order());
  r.context["supp_f"] = static_cast<double>(s);
  r.context["catalog_support"] = static_cast<double>(cs);
  r.context["rksupp"] = static_cast<double>(rksupp(g, f));
  if (is_hermitian_function(g, f)) r.context["minsupp"] = static_cast<double>(minsupp_hermitian(g, f));
  return r;
}

InequalityReport factor4_check(const FiniteGroup& g, const GroupFunction& f, double tol) {
  require_length(g, f, "factor4_check");
  require_nonzero(f, "factor4_check");
  const double n = static_cast<double>(g.order());
  const std::size_t sf = support(f).size;
  const std::size_t rf = rksupp(g, f);
  const auto sym = symmetrize(g, f);
  // Support of g is measured against f's scale so cancellation counts as zero.
  const double thr = 1e-9 * f.cwiseAbs().maxCoeff();
  std::size_t sg = 0;
  for (const auto& z : sym.g)
    if (std::abs(z) > thr) ++sg;
  const std::size_t mg = minsupp_hermitian(g, sym.g);

  auto r = make_report("factor-4", static_cast<double>(sf * rf), n / 4.0, tol);
  r.context["n"] = n;
  r.context["supp_f"] = static_cast<double>(sf);
  r.context["rksupp_f"] = static_cast<double>(rf);
  r.context["supp_g"] = static_cast<double>(sg);
  r.context["minsupp_g"] = static_cast<double>(mg);
  r.context["used_skew"] = sym.used_skew ? 1.0 : 0.0;
  const bool step_supp = sg <= 2 * sf;
  const bool step_rank = mg <= 2 * rf;
  const bool step_hermitian = static_cast<double>(sg * mg) >= n;
  if (!step_supp) r.notes.push_back("|supp g| > 2 |supp f|");
  if (!step_rank) r.notes.push_back("minsupp(g) > 2 rksupp(f)");
  if (!step_hermitian) r.notes.push_back("|supp g| minsupp(g) < n");
  r.pass = r.pass && step_supp && step_rank && step_hermitian;
  return r;
}

InequalityReport kuperberg_check(const FiniteGroup& g, const GroupFunction& f,
                                 const IrrepCatalog* irreps, double tol) {
  require_length(g, f, "kuperberg_check");
  require_nonzero(f, "kuperberg_check");
  const RealVector sv = singular_values(regular_rep(g, f));
  const double s1 = sv.sum();
  const double sinf = sv.maxCoeff();
  const double lhs = (lp_norm(f, kL1) / lp_norm(f, kLinf)) * (s1 / sinf);
  auto r = make_report("kuperberg", lhs, static_cast<double>(g.order()), tol);
  r.context["n"] = static_cast<double>(g.order());
  r.context["schatten_1"] = s1;
  r.context["schatten_inf"] = sinf;
  if (irreps != nullptr) {
    double b1 = 0.0, binf = 0.0;
    for (const auto& rho : irreps->reps()) {
      const RealVector s = singular_values(fourier_coefficient(rho, f));
      b1 += rho.dim * s.sum();
      binf = std::max(binf, s.maxCoeff());
    }
    const double drift = std::max(std::abs(b1 - s1), std::abs(binf - sinf)) / sinf;
    r.context["block_formula_drift"] = drift;
    if (drift > 1e-8) {
      r.notes.push_back("block Schatten formula disagrees with direct SVD");
      r.pass = false;
    }
  }
  return r;
}

GroupFunction random_group_function(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_test_vector(n, rng);
}

N2Result n2_hadamard_check(const FiniteGroup& g, const IrrepCatalog& irreps, std::size_t trials,
                           std::uint64_t seed, double tol) {
  const std::size_t n = g.order();
  const double n2 = static_cast<double>(n * n);
  const ComplexMatrix p = analysis_matrix(g, irreps);
  N2Result out;
  out.trials = trials;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    const GroupFunction f = random_test_vector(n, rng);
    const ComplexMatrix tf = regular_rep(g, f);
    const ComplexMatrix fwd = p * tf * p.adjoint();
    const ComplexMatrix back = p.adjoint() * fwd * p;
    out.recovery_residual =
        std::max(out.recovery_residual, (back - n2 * tf).cwiseAbs().maxCoeff() / (n2 * tf.cwiseAbs().maxCoeff()));
    out.forward_ratio = std::max(out.forward_ratio, fwd.cwiseAbs().maxCoeff() / tf.cwiseAbs().sum());

    BlockDiagonal nb;
    nb.total = n;
    for (const auto& r : irreps.reps()) {
      ComplexMatrix blk(r.dim, r.dim);
      for (auto& z : blk.reshaped()) {
        const double re = gauss(rng);
        z = Complex(re, gauss(rng));
      }
      nb.multiplicity.push_back(r.dim);
      nb.blocks.push_back(blk);
    }
    const ComplexMatrix nm = nb.assemble();
    const ComplexMatrix bn = p.adjoint() * nm * p;
    out.backward_ratio = std::max(out.backward_ratio, bn.cwiseAbs().maxCoeff() / nm.cwiseAbs().sum());
  }
  const double worst = std::max(out.forward_ratio, out.backward_ratio);
  out.report = make_report("n2-hadamard", worst, 1.0, tol, Relation::AtMost, 1.0);
  out.report.context["n"] = static_cast<double>(n);
  out.report.context["trials"] = static_cast<double>(trials);
  out.report.context["recovery_residual"] = out.recovery_residual;
  out.report.context["forward_ratio"] = out.forward_ratio;
  out.report.context["backward_ratio"] = out.backward_ratio;
  if (out.recovery_residual > 1e-8) {
    out.report.notes.push_back("B(A T_f) != n^2 T_f");
    out.report.pass = false;
  }
  return out;
}

}  // namespace khup
