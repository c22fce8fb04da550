#pragma once

#include <map>
#include <string>
#include <vector>

namespace khup {

/// How lhs and rhs are compared. Lower bounds (the uncertainty
/// inequalities) pass when ratio >= bound * (1 - tol); upper bounds (the
/// p >= 2 counterexample, standalone norm-ratio bounds) pass when
/// ratio <= bound * (1 + tol); Match passes when |ratio - 1| <= tol.
enum class Relation { AtLeast, AtMost, Match };

struct InequalityReport {
  std::string theorem_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = false;
  double tol = 1e-9;
  Relation relation = Relation::AtLeast;
  double bound = 1.0;
  std::map<std::string, double> context;
  std::vector<std::string> notes;
};

/// Fills ratio and pass. rhs == 0 gives ratio +inf (lhs > 0) or 1 (lhs == 0).
InequalityReport make_report(std::string theorem_id, double lhs, double rhs, double tol,
                             Relation relation = Relation::AtLeast, double bound = 1.0);

const char* relation_name(Relation r);

/// Every theorem id a checker can emit, in registry order.
const std::vector<std::string>& theorem_registry();

}  // namespace khup
