#include "khup/finite_up.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace khup {

namespace {

void require_hypotheses(const ComplexMatrix& a, const KHadamardCertificate& cert,
                        const ComplexVector& v, const char* who) {
  if (!cert.certified()) {
    throw std::invalid_argument(std::string(who) +
                                ": matrix is not certified k-Hadamard (singular Gram or entry "
                                "bound exceeded)");
  }
  require_finite(v, who);
  if (v.size() != a.cols()) {
    throw std::invalid_argument(std::string(who) + ": vector length " + std::to_string(v.size()) +
                                " does not match matrix columns " + std::to_string(a.cols()));
  }
  if (v.cwiseAbs().maxCoeff() == 0.0) {
    throw std::invalid_argument(std::string(who) + ": zero vector");
  }
}

void require_unitary(const ComplexMatrix& a, const KHadamardCertificate& cert, const char* who) {
  if (!cert.is_unitary_scaled || a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(who) +
                                ": needs a square matrix with A*A = kI (unitary_defect " +
                                std::to_string(cert.unitary_defect) + ")");
  }
}

void base_context(InequalityReport& r, const KHadamardCertificate& cert, const ComplexVector& v) {
  r.context["k"] = cert.k;
  r.context["n"] = static_cast<double>(v.size());
}

}  // namespace

InequalityReport primary_up_check(const ComplexMatrix& a, const KHadamardCertificate& cert,
                                  const ComplexVector& v, double tol) {
  require_hypotheses(a, cert, v, "primary_up_check");
  const ComplexVector av = a * v;
  const double lhs = lp_norm(v, kL1) * lp_norm(av, kL1);
  const double rhs = cert.k * lp_norm(v, kLinf) * lp_norm(av, kLinf);
  auto r = make_report("primary-up", lhs, rhs, tol);
  base_context(r, cert, v);
  return r;
}

InequalityReport support_up_check(const ComplexMatrix& a, const KHadamardCertificate& cert,
                                  const ComplexVector& v, double tol, double support_tol) {
  require_hypotheses(a, cert, v, "support_up_check");
  const ComplexVector av = a * v;
  const auto sv = support(v, support_tol);
  const auto sav = support(av, support_tol);
  auto r = make_report("support-up", static_cast<double>(sv.size * sav.size), cert.k, tol);
  base_context(r, cert, v);
  r.context["supp_v"] = static_cast<double>(sv.size);
  r.context["supp_Av"] = static_cast<double>(sav.size);
  return r;
}

InequalityReport approx_support_l1_check(const ComplexMatrix& a,
                                         const KHadamardCertificate& cert,
                                         const ComplexVector& v, double eps, double eta,
                                         double tol) {
  require_hypotheses(a, cert, v, "approx_support_l1_check");
  if (!(eps >= 0 && eps <= 1 && eta >= 0 && eta <= 1)) {
    throw std::invalid_argument("approx_support_l1_check: eps, eta must lie in [0, 1]");
  }
  const ComplexVector av = a * v;
  const auto sv = approx_support(v, kL1, eps);
  const auto sav = approx_support(av, kL1, eta);
  auto r = make_report("approx-support-l1", static_cast<double>(sv.size * sav.size),
                       cert.k * (1.0 - eps) * (1.0 - eta), tol);
  base_context(r, cert, v);
  r.context["eps"] = eps;
  r.context["eta"] = eta;
  r.context["supp_v"] = static_cast<double>(sv.size);
  r.context["supp_Av"] = static_cast<double>(sav.size);
  return r;
}

InequalityReport approx_support_l2_check(const ComplexMatrix& a,
                                         const KHadamardCertificate& cert,
                                         const ComplexVector& v, double eps, double eta,
                                         double tol) {
  require_hypotheses(a, cert, v, "approx_support_l2_check");
  require_unitary(a, cert, "approx_support_l2_check");
  if (!(eps >= 0 && eps <= 1 && eta >= 0 && eta <= 1)) {
    throw std::invalid_argument("approx_support_l2_check: eps, eta must lie in [0, 1]");
  }
  const ComplexVector av = a * v;
  const auto sv = approx_support(v, kL2, eps);
  const auto sav = approx_support(av, kL2, eta);
  const double slack = std::max(0.0, 1.0 - eps - eta);
  auto r = make_report("approx-support-l2", static_cast<double>(sv.size * sav.size),
                       cert.k * slack * slack, tol);
  base_context(r, cert, v);
  r.context["eps"] = eps;
  r.context["eta"] = eta;
  r.context["supp_v"] = static_cast<double>(sv.size);
  r.context["supp_Av"] = static_cast<double>(sav.size);
  return r;
}

InequalityReport supp1_vs_supp2_check(const ComplexVector& v, double eps) {
  require_finite(v, "supp1_vs_supp2_check");
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("supp1_vs_supp2_check: eps in (0,1)");
  const auto s1 = approx_support(v, kL1, eps * eps);
  const auto s2 = approx_support(v, kL2, eps);
  // Integer sizes: compare exactly.
  auto r = make_report("supp1-vs-supp2", static_cast<double>(s1.size),
                       static_cast<double>(s2.size), 0.0);
  r.context["eps"] = eps;
  r.context["n"] = static_cast<double>(v.size());
  return r;
}

InequalityReport norm_up_check(const ComplexMatrix& a, const KHadamardCertificate& cert,
                               const ComplexVector& v, NormIndex q, double tol) {
  require_hypotheses(a, cert, v, "norm_up_check");
  const ComplexVector av = a * v;
  const double lhs = lp_norm(v, kL1) * lp_norm(av, kL1);
  const double rhs = std::pow(cert.k, q.one_minus_reciprocal()) * lp_norm(v, q) * lp_norm(av, q);
  auto r = make_report("norm-up-p1", lhs, rhs, tol);
  base_context(r, cert, v);
  r.context["q"] = q.is_infinite() ? std::numeric_limits<double>::infinity() : q.value();
  return r;
}

InequalityReport hausdorff_young_check(const ComplexMatrix& a,
                                       const KHadamardCertificate& cert,
                                       const ComplexVector& v, double p, double tol) {
  require_hypotheses(a, cert, v, "hausdorff_young_check");
  require_unitary(a, cert, "hausdorff_young_check");
  if (!(p > 1.0 && p < 2.0)) {
    throw std::invalid_argument("hausdorff_young_check: p must lie in (1, 2)");
  }
  const NormIndex pi(p);
  const ComplexVector av = a * v;
  const double lhs = std::pow(cert.k, pi.one_minus_reciprocal()) * lp_norm(v, pi);
  const double rhs = lp_norm(av, pi.conjugate());
  auto r = make_report("hausdorff-young", lhs, rhs, tol);
  base_context(r, cert, v);
  r.context["p"] = p;
  return r;
}

InequalityReport norm_up_midrange_check(const ComplexMatrix& a,
                                        const KHadamardCertificate& cert,
                                        const ComplexVector& v, double p, NormIndex q,
                                        double tol) {
  require_hypotheses(a, cert, v, "norm_up_midrange_check");
  require_unitary(a, cert, "norm_up_midrange_check");
  if (!(p > 1.0 && p < 2.0)) {
    throw std::invalid_argument("norm_up_midrange_check: p must lie in (1, 2)");
  }
  const NormIndex pi(p);
  const double pc = pi.conjugate().value();
  if (q.is_infinite() || q.value() < p || q.value() > pc) {
    throw std::invalid_argument("norm_up_midrange_check: q must lie in [p, p'] = [" +
                                std::to_string(p) + ", " + std::to_string(pc) + "]");
  }
  const double qv = q.value();
  const ComplexVector av = a * v;
  const double lhs = lp_norm(v, pi) * lp_norm(av, pi);
  const double rhs = std::pow(cert.k, (qv - p) / (p * qv)) * lp_norm(v, q) * lp_norm(av, q);
  auto r = make_report("norm-up-midrange", lhs, rhs, tol);
  base_context(r, cert, v);
  r.context["p"] = p;
  r.context["q"] = qv;
  return r;
}

CounterexampleResult p_geq_2_counterexample(const FiniteAbelianGroup& g, NormIndex p,
                                            NormIndex q, double tol) {
  if (!p.is_infinite() && p.value() < 2.0) {
    throw std::invalid_argument("p_geq_2_counterexample: p must be >= 2");
  }
  const ComplexMatrix a = fourier_matrix(g);
  const auto n = static_cast<Eigen::Index>(g.order());
  const double root = std::sqrt(static_cast<double>(n));

  CounterexampleResult out;
  out.v = ComplexVector::Ones(n);
  out.v[0] += root;
  const ComplexVector av = a * out.v;
  out.eigen_residual = (av - root * out.v).cwiseAbs().maxCoeff();

  const double lhs = lp_norm(out.v, p) * lp_norm(av, p);
  const double rhs = lp_norm(out.v, q) * lp_norm(av, q);
  out.report = make_report("no-norm-up-p-geq-2", lhs, rhs, tol, Relation::AtMost, 2.0);
  out.report.context["n"] = static_cast<double>(n);
  out.report.context["p"] = p.is_infinite() ? std::numeric_limits<double>::infinity() : p.value();
  out.report.context["q"] = q.is_infinite() ? std::numeric_limits<double>::infinity() : q.value();
  out.report.context["eigen_residual"] = out.eigen_residual;
  return out;
}

ComplexVector indicator(std::size_t n, const std::vector<std::size_t>& elements) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t e : elements) {
    if (e >= n) throw std::invalid_argument("indicator: element out of range");
    v[static_cast<Eigen::Index>(e)] = 1.0;
  }
  return v;
}

ComplexVector harmonic_vector(std::size_t n) {
  ComplexVector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v[static_cast<Eigen::Index>(i)] = 1.0 / static_cast<double>(i + 1);
  return v;
}

ComplexVector delta_vector(std::size_t n, std::size_t at) {
  if (at >= n) throw std::invalid_argument("delta_vector: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(n));
  v[static_cast<Eigen::Index>(at)] = 1.0;
  return v;
}

}  // namespace khup
