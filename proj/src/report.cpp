#include "khup/report.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace khup {

InequalityReport make_report(std::string theorem_id, double lhs, double rhs, double tol,
                             Relation relation, double bound) {
  if (!(lhs >= 0.0) || !(rhs >= 0.0)) {
    throw std::logic_error(theorem_id + ": report sides must be nonnegative");
  }
  InequalityReport r;
  r.theorem_id = std::move(theorem_id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.relation = relation;
  r.bound = bound;
  if (rhs == 0.0) {
    r.ratio = lhs > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
  } else {
    r.ratio = lhs / rhs;
  }
  switch (relation) {
    case Relation::AtLeast:
      r.pass = r.ratio >= bound * (1.0 - tol);
      break;
    case Relation::AtMost:
      r.pass = r.ratio <= bound * (1.0 + tol);
      break;
    case Relation::Match:
      r.pass = std::abs(r.ratio - 1.0) <= tol;
      break;
  }
  return r;
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::AtLeast:
      return "at_least";
    case Relation::AtMost:
      return "at_most";
    case Relation::Match:
      return "match";
  }
  return "?";
}

const std::vector<std::string>& theorem_registry() {
  static const std::vector<std::string> ids = {
      "primary-up",
      "support-up",
      "approx-support-l1",
      "approx-support-l2",
      "supp1-vs-supp2",
      "norm-up-p1",
      "hausdorff-young",
      "norm-up-midrange",
      "no-norm-up-p-geq-2",
      "meshulam",
      "min-support-up",
      "factor-4",
      "kuperberg",
      "n2-hadamard",
      "primary-up-grid",
      "norm-up-grid",
      "support-measure",
      "heisenberg-q",
      "variance-bound",
      "moment-up",
      "moment-up-corollary",
      "family-fab",
      "family-gc",
      "f-coverage",
  };
  return ids;
}

}  // namespace khup
