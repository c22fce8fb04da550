#include "khup/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace khup {

SweepSummary summarize(const std::vector<InequalityReport>& reports) {
  SweepSummary s;
  s.trials = reports.size();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    s.min_ratio = std::min(s.min_ratio, r.ratio);
    s.max_ratio = std::max(s.max_ratio, r.ratio);
    if (!r.pass) {
      if (s.violations == 0) s.first_violation = i;
      ++s.violations;
    }
  }
  return s;
}

ComplexVector random_gaussian_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) {
    const double re = g(rng);
    x = Complex(re, g(rng));
  }
  return v;
}

ComplexVector random_test_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> shape(0, 3);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto len = static_cast<Eigen::Index>(n);
  ComplexVector v = ComplexVector::Zero(len);

  switch (shape(rng)) {
    case 0:
      v = random_gaussian_vector(n, rng);
      break;
    case 1: {
      std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, n / 3));
      const std::size_t s = count(rng);
      std::vector<std::size_t> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      for (std::size_t i = 0; i < s; ++i) {
        const double re = g(rng);
        v[static_cast<Eigen::Index>(idx[i])] = Complex(re, g(rng));
      }
      break;
    }
    case 2: {
      std::bernoulli_distribution keep(u(rng));
      for (auto& x : v) x = keep(rng) ? 1.0 : 0.0;
      break;
    }
    default: {
      const double decay = 0.5 + 2.0 * u(rng);
      for (Eigen::Index i = 0; i < len; ++i) {
        v[i] = std::pow(static_cast<double>(i + 1), -decay) * std::polar(1.0, 2.0 * M_PI * u(rng));
      }
      break;
    }
  }
  if (v.cwiseAbs().maxCoeff() == 0.0) v[0] = 1.0;
  const double mag = std::exp(4.0 * (u(rng) - 0.5));
  return v * std::polar(mag, 2.0 * M_PI * u(rng));
}

}  // namespace khup
