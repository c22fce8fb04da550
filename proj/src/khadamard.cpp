#include "khup/khadamard.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace khup {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_factors)
    : factors_(std::move(cyclic_factors)) {
  for (int f : factors_) {
    if (f < 2) throw std::invalid_argument("cyclic factor must be >= 2, got " + std::to_string(f));
    order_ *= static_cast<std::size_t>(f);
    if (order_ > (std::size_t{1} << 24)) throw std::invalid_argument("group order too large");
  }
}

std::vector<int> FiniteAbelianGroup::coordinates(std::size_t index) const {
  std::vector<int> c(factors_.size());
  for (std::size_t j = factors_.size(); j-- > 0;) {
    c[j] = static_cast<int>(index % static_cast<std::size_t>(factors_[j]));
    index /= static_cast<std::size_t>(factors_[j]);
  }
  return c;
}

std::size_t FiniteAbelianGroup::index(const std::vector<int>& coords) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const int n = factors_[j];
    idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(((coords[j] % n) + n) % n);
  }
  return idx;
}

std::size_t FiniteAbelianGroup::add(std::size_t a, std::size_t b) const {
  auto ca = coordinates(a);
  const auto cb = coordinates(b);
  for (std::size_t j = 0; j < ca.size(); ++j) ca[j] += cb[j];
  return index(ca);
}

std::size_t FiniteAbelianGroup::negate(std::size_t a) const {
  auto ca = coordinates(a);
  for (int& x : ca) x = -x;
  return index(ca);
}

bool FiniteAbelianGroup::is_subgroup(const std::vector<std::size_t>& elements) const {
  const std::set<std::size_t> s(elements.begin(), elements.end());
  if (!s.contains(0)) return false;
  for (std::size_t a : s) {
    if (a >= order_) return false;
    for (std::size_t b : s) {
      if (!s.contains(add(a, b))) return false;
    }
  }
  return true;
}

ComplexMatrix fourier_matrix(const FiniteAbelianGroup& g) {
  const std::size_t n = g.order();
  const auto& f = g.factors();
  std::size_t lcm = 1;
  for (int x : f) lcm = std::lcm(lcm, static_cast<std::size_t>(x));

  // Table of w_lcm^{-e}; every entry is one of these.
  std::vector<Complex> roots(lcm);
  for (std::size_t e = 0; e < lcm; ++e) {
    roots[e] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(e) /
                                   static_cast<double>(lcm));
  }
  std::vector<std::vector<int>> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = g.coordinates(i);

  ComplexMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t chi = 0; chi < static_cast<std::ptrdiff_t>(n); ++chi) {
    const auto& c = coords[static_cast<std::size_t>(chi)];
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t e = 0;
      for (std::size_t j = 0; j < f.size(); ++j) {
        const std::size_t scale = lcm / static_cast<std::size_t>(f[j]);
        const auto nj = static_cast<std::size_t>(f[j]);
        e += static_cast<std::size_t>(c[j]) * static_cast<std::size_t>(coords[x][j]) % nj * scale;
      }
      a(chi, static_cast<Eigen::Index>(x)) = roots[e % lcm];
    }
  }
  return a;
}

ComplexMatrix sylvester_hadamard(int m) {
  if (m < 0 || m > 12) throw std::invalid_argument("sylvester_hadamard: need 0 <= m <= 12");
  const std::size_t n = std::size_t{1} << m;
  ComplexMatrix h(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  // Each tensor factor contributes -1 exactly at (row bit 1, column bit 0).
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned bits = static_cast<unsigned>(i) & ~static_cast<unsigned>(j);
      h(i, static_cast<Eigen::Index>(j)) = (std::popcount(bits) % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return h;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

ComplexMatrix paley_hadamard(int q) {
  if (!is_prime(q)) {
    throw std::invalid_argument("paley_hadamard: q = " + std::to_string(q) + " is not prime");
  }
  if (q % 4 != 3) {
    throw std::invalid_argument("paley_hadamard: q = " + std::to_string(q) + " is " +
                                std::to_string(q % 4) +
                                " mod 4; the Paley I construction needs q = 3 mod 4");
  }
  if (q > 997) throw std::invalid_argument("paley_hadamard: q must be <= 997");

  std::vector<int> chi(static_cast<std::size_t>(q), -1);
  chi[0] = 0;
  for (int x = 1; x < q; ++x) chi[static_cast<std::size_t>(x * x % q)] = 1;

  // H = I + S, S = [[0, 1^T], [-1, Q]], Q_ij = chi(j - i). S is skew with
  // S S^T = qI, hence H H^T = (q+1) I.
  const Eigen::Index n = q + 1;
  ComplexMatrix h = ComplexMatrix::Identity(n, n);
  for (Eigen::Index j = 1; j < n; ++j) {
    h(0, j) += 1.0;
    h(j, 0) -= 1.0;
  }
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      h(i + 1, j + 1) += static_cast<double>(chi[static_cast<std::size_t>(((j - i) % q + q) % q)]);
    }
  }
  return h;
}

ComplexMatrix hadamard_code_matrix(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("hadamard_code_matrix: need 1 <= n <= 16");
  const std::size_t rows = std::size_t{1} << n;
  ComplexMatrix s(static_cast<Eigen::Index>(rows), n);
  for (std::size_t r = 0; r < rows; ++r) {
    for (int j = 0; j < n; ++j) {
      s(static_cast<Eigen::Index>(r), j) = ((r >> j) & 1U) ? -1.0 : 1.0;
    }
  }
  return s;
}

namespace {

std::vector<std::array<int, 3>> projective_points(int q) {
  std::vector<std::array<int, 3>> pts;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
  }
  for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
  pts.push_back({0, 0, 1});
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

ComplexMatrix pg2_incidence(int q) {
  if (!is_prime(q)) {
    throw std::invalid_argument("pg2_incidence: q = " + std::to_string(q) +
                                " is not prime (prime powers are not supported)");
  }
  if (q > 97) throw std::invalid_argument("pg2_incidence: q must be <= 97");
  const auto pts = projective_points(q);
  const auto& lines = pts;  // PG(2,q) is self-dual
  const auto n = static_cast<Eigen::Index>(pts.size());
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& p = pts[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& l = lines[static_cast<std::size_t>(j)];
      if ((p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0) a(i, j) = 1.0;
    }
  }
  return a;
}

ComplexMatrix scaled_random_orthogonal(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("scaled_random_orthogonal: need n >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = gauss(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  const double peak = q.cwiseAbs().maxCoeff();
  return (q / peak).cast<Complex>();
}

KHadamardCertificate certify_k_hadamard(const ComplexMatrix& a, double tol) {
  require_finite(a, "certify_k_hadamard input");
  KHadamardCertificate cert;
  cert.tol = tol;
  cert.entry_bound = op_norm_1_to_inf(a);
  cert.entry_bound_ok = cert.entry_bound <= 1.0 + tol;

  const ComplexMatrix gram = a.adjoint() * a;
  Eigen::PartialPivLU<ComplexMatrix> lu(gram);
  const double rcond = lu.rcond();
  cert.condition_estimate = rcond > 0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!std::isfinite(rcond) || rcond * kGramConditionLimit < 1.0) {
    cert.singular = true;
    cert.k = 0.0;
    cert.gram_inverse_norm = std::numeric_limits<double>::infinity();
    cert.unitary_defect = std::numeric_limits<double>::infinity();
    return cert;
  }
  const ComplexMatrix inv = lu.inverse();
  cert.gram_inverse_norm = op_norm_inf_to_inf(inv);
  cert.k = 1.0 / cert.gram_inverse_norm;
  const ComplexMatrix defect =
      gram - cert.k * ComplexMatrix::Identity(gram.rows(), gram.cols());
  cert.unitary_defect = op_norm_inf_to_inf(defect) / cert.k;
  cert.is_unitary_scaled = cert.unitary_defect < tol;
  return cert;
}

}  // namespace khup
