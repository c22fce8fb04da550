#pragma once

// Trial sweeps with an OpenMP path and a serial reference. Each trial draws
// from its own generator seeded from (seed, trial index), so both paths
// produce identical reports in identical order.

#include "khup/numerics.hpp"
#include "khup/report.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace khup {

enum class Execution { Serial, Parallel };

/// splitmix64 finalizer applied to seed + golden-ratio multiple of i.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct SweepSummary {
  std::size_t trials = 0;
  std::size_t violations = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = 0.0;
  std::size_t first_violation = 0;  // meaningful when violations > 0
};

SweepSummary summarize(const std::vector<InequalityReport>& reports);

/// Runs trial(rng, i) -> InequalityReport for i in [0, trials).
template <class Trial>
std::vector<InequalityReport> run_trials(std::size_t trials, std::uint64_t seed, Execution ex,
                                         Trial&& trial) {
  std::vector<InequalityReport> out(trials);
  const auto count = static_cast<std::ptrdiff_t>(trials);
  if (ex == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      std::mt19937_64 rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
      out[static_cast<std::size_t>(i)] = trial(rng, static_cast<std::size_t>(i));
    }
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      std::mt19937_64 rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
      out[static_cast<std::size_t>(i)] = trial(rng, static_cast<std::size_t>(i));
    }
  }
  return out;
}

/// Mixture of shapes that exercise both generic and near-tight regimes:
/// dense complex Gaussian, sparse Gaussian, random-subset indicator, and a
/// decaying profile. Scaled by a random nonzero complex constant.
ComplexVector random_test_vector(std::size_t n, std::mt19937_64& rng);

/// Dense complex Gaussian entries.
ComplexVector random_gaussian_vector(std::size_t n, std::mt19937_64& rng);

}  // namespace khup
