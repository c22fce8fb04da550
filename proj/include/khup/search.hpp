#pragma once

// Search for vectors that make an uncertainty inequality nearly tight.

#include "khup/finite_up.hpp"

#include <cstdint>
#include <string>

namespace khup {

enum class SearchObjective { SupportProduct, L1RatioProduct, ApproxSupport };

SearchObjective parse_objective(const std::string& name);
const char* objective_name(SearchObjective o);

struct SearchOptions {
  long budget = 2000;        // maximum objective evaluations
  std::uint64_t seed = 1;
  double eps = 0.1;          // used by ApproxSupport (eps = eta)
  double support_tol = kSupportTol;
};

struct SearchResult {
  ComplexVector best;
  InequalityReport report;   // report for `best`; ratio is the minimized value
  long evaluations = 0;
  std::string origin;        // which candidate family produced `best`
};

/// Structured candidates first (deltas, all-ones, arithmetic progressions
/// {0, d, 2d, ...} for d | n, bit-mask subcubes when n is a power of two),
/// then random nonnegative restarts improved by coordinate descent, then
/// complex phase perturbations of the incumbent.
SearchResult extremal_search(const ComplexMatrix& a, const KHadamardCertificate& cert,
                             SearchObjective objective, const SearchOptions& options = {});

}  // namespace khup
