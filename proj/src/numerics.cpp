#include "khup/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace khup {

NormIndex::NormIndex(double p) : p_(p) {
  if (std::isinf(p) && p > 0) {
    p_ = 0.0;
    infinite_ = true;
    return;
  }
  if (!(p >= 1.0)) {
    throw std::invalid_argument("norm index must satisfy p >= 1, got " + std::to_string(p));
  }
}

NormIndex NormIndex::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") {
    return infinity();
  }
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse norm index '" + text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument("cannot parse norm index '" + text + "'");
  }
  return NormIndex(p);
}

double NormIndex::value() const {
  if (infinite_) throw std::logic_error("NormIndex::value() called on infinity");
  return p_;
}

NormIndex NormIndex::conjugate() const {
  if (infinite_) return NormIndex(1.0);
  if (p_ == 1.0) return infinity();
  return NormIndex(p_ / (p_ - 1.0));
}

std::string NormIndex::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os.precision(12);
  os << p_;
  return os.str();
}

void require_finite(const ComplexVector& v, const char* what) {
  if (v.size() == 0) throw std::invalid_argument(std::string(what) + " is empty");
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) {
      throw std::invalid_argument(std::string(what) + " has a non-finite entry at " +
                                  std::to_string(i));
    }
  }
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (m.size() == 0) throw std::invalid_argument(std::string(what) + " is empty");
  if (!m.allFinite()) throw std::invalid_argument(std::string(what) + " has non-finite entries");
}

double lp_norm(std::span<const double> magnitudes, NormIndex p) {
  double peak = 0.0;
  for (double m : magnitudes) peak = std::max(peak, std::abs(m));
  if (p.is_infinite() || peak == 0.0) return peak;
  const double e = p.value();
  if (e == 1.0) {
    double s = 0.0;
    for (double m : magnitudes) s += std::abs(m);
    return s;
  }
  // Scale by the peak so large p cannot overflow.
  double s = 0.0;
  for (double m : magnitudes) s += std::pow(std::abs(m) / peak, e);
  return peak * std::pow(s, 1.0 / e);
}

double lp_norm(const ComplexVector& v, NormIndex p) {
  std::vector<double> mags(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) mags[static_cast<std::size_t>(i)] = std::abs(v[i]);
  return lp_norm(std::span<const double>(mags), p);
}

double op_norm_1_to_inf(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

double op_norm_inf_to_inf(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

RealVector singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return RealVector();
  RealVector s;
  if (m.rows() * m.cols() <= 64 * 64) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    s = svd.singularValues();
  } else {
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    s = svd.singularValues();
  }
  if (!s.allFinite()) throw NumericalError("SVD did not converge (non-finite singular values)");
  return s;
}

double schatten_norm(const ComplexMatrix& m, NormIndex p) {
  const RealVector s = singular_values(m);
  return lp_norm(std::span<const double>(s.data(), static_cast<std::size_t>(s.size())), p);
}

SupportResult support(const ComplexVector& v, double tol) {
  if (tol < 0) throw std::invalid_argument("support tolerance must be nonnegative");
  SupportResult out;
  double peak = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) peak = std::max(peak, std::abs(v[i]));
  if (peak == 0.0) {
    out.zero_input = true;
    return out;
  }
  const double cut = tol * peak;
  double excluded = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > cut) {
      out.indices.push_back(static_cast<std::size_t>(i));
    } else {
      excluded = std::max(excluded, a);
    }
  }
  out.size = out.indices.size();
  out.mass_excluded = excluded;
  return out;
}

SupportResult approx_support(const ComplexVector& v, NormIndex p, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in [0, 1]");
  const std::size_t n = static_cast<std::size_t>(v.size());
  std::vector<double> mag(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mag[i] = std::abs(v[static_cast<Eigen::Index>(i)]);
    peak = std::max(peak, mag[i]);
  }
  if (peak == 0.0) throw std::invalid_argument("approximate support of the zero vector");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return mag[a] > mag[b]; });

  // tail[t] = excluded p-mass when T is the first t sorted entries.
  std::vector<double> tail(n + 1, 0.0);
  double total = 0.0;
  if (p.is_infinite()) {
    for (std::size_t t = 0; t < n; ++t) tail[t] = mag[order[t]];
    total = peak;
  } else {
    const double e = p.value();
    double acc = 0.0;
    for (std::size_t t = n; t-- > 0;) {
      acc += std::pow(mag[order[t]] / peak, e);
      tail[t] = acc;
    }
    total = peak * std::pow(acc, 1.0 / e);
    for (std::size_t t = 0; t <= n; ++t) tail[t] = peak * std::pow(tail[t], 1.0 / e);
  }

  const double budget = eps * total * (1.0 + kSupportMassSlack);
  std::size_t take = n;
  for (std::size_t t = 0; t <= n; ++t) {
    if (tail[t] <= budget) {
      take = t;
      break;
    }
  }

  SupportResult out;
  out.indices.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
  std::sort(out.indices.begin(), out.indices.end());
  out.size = take;
  out.mass_excluded = tail[take];
  return out;
}

std::size_t matrix_rank(const ComplexMatrix& m, double tol) {
  if (tol < 0) throw std::invalid_argument("rank tolerance must be nonnegative");
  if (m.size() == 0) return 0;
  const RealVector s = singular_values(m);
  if (s.size() == 0 || s[0] == 0.0) return 0;
  const double cut = tol * s[0];
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > cut) ++r;
  }
  return r;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace khup
