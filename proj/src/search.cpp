#include "khup/search.hpp"

#include "khup/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace khup {

SearchObjective parse_objective(const std::string& name) {
  if (name == "support_product" || name == "support-product") return SearchObjective::SupportProduct;
  if (name == "l1_ratio_product" || name == "l1-ratio-product") return SearchObjective::L1RatioProduct;
  if (name == "approx_support" || name == "approx-support") return SearchObjective::ApproxSupport;
  throw std::invalid_argument("unknown objective '" + name +
                              "'; valid: support_product, l1_ratio_product, approx_support");
}

const char* objective_name(SearchObjective o) {
  switch (o) {
    case SearchObjective::SupportProduct:
      return "support_product";
    case SearchObjective::L1RatioProduct:
      return "l1_ratio_product";
    case SearchObjective::ApproxSupport:
      return "approx_support";
  }
  return "?";
}

namespace {

class Searcher {
 public:
  Searcher(const ComplexMatrix& a, const KHadamardCertificate& cert, SearchObjective obj,
           const SearchOptions& opt)
      : a_(a), cert_(cert), obj_(obj), opt_(opt) {}

  bool exhausted() const { return result_.evaluations >= opt_.budget; }

  // Returns the ratio, or +inf once the budget is spent.
  double evaluate(const ComplexVector& v, const std::string& origin) {
    if (exhausted()) return std::numeric_limits<double>::infinity();
    if (v.cwiseAbs().maxCoeff() == 0.0) return std::numeric_limits<double>::infinity();
    ++result_.evaluations;
    InequalityReport r;
    switch (obj_) {
      case SearchObjective::SupportProduct:
        r = support_up_check(a_, cert_, v, kRatioTol, opt_.support_tol);
        break;
      case SearchObjective::L1RatioProduct:
        r = primary_up_check(a_, cert_, v);
        break;
      case SearchObjective::ApproxSupport:
        r = approx_support_l1_check(a_, cert_, v, opt_.eps, opt_.eps);
        break;
    }
    if (!have_best_ || r.ratio < result_.report.ratio) {
      have_best_ = true;
      result_.best = v;
      result_.report = r;
      result_.origin = origin;
    }
    return r.ratio;
  }

  // Greedy coordinate descent over multiplicative moves on single entries.
  void descend(ComplexVector v, const std::string& origin) {
    double current = evaluate(v, origin);
    static constexpr double kMoves[] = {0.0, 0.5, 2.0};
    bool improved = true;
    while (improved && !exhausted()) {
      improved = false;
      for (Eigen::Index i = 0; i < v.size() && !exhausted(); ++i) {
        if (v[i] == 0.0) continue;
        for (double m : kMoves) {
          ComplexVector w = v;
          w[i] *= m;
          const double val = evaluate(w, origin);
          if (val < current) {
            current = val;
            v = std::move(w);
            improved = true;
            break;
          }
        }
      }
    }
  }

  SearchResult finish() && {
    if (!have_best_) throw std::invalid_argument("extremal_search: budget produced no evaluation");
    result_.report.context["evaluations"] = static_cast<double>(result_.evaluations);
    return std::move(result_);
  }

  const ComplexVector& best() const { return result_.best; }

 private:
  const ComplexMatrix& a_;
  const KHadamardCertificate& cert_;
  SearchObjective obj_;
  SearchOptions opt_;
  SearchResult result_;
  bool have_best_ = false;
};

}  // namespace

SearchResult extremal_search(const ComplexMatrix& a, const KHadamardCertificate& cert,
                             SearchObjective objective, const SearchOptions& options) {
  if (options.budget <= 0) throw std::invalid_argument("extremal_search: budget must be positive");
  if (!cert.certified()) throw std::invalid_argument("extremal_search: matrix is not certified");
  const auto n = static_cast<std::size_t>(a.cols());
  Searcher s(a, cert, objective, options);

  s.evaluate(ComplexVector::Ones(static_cast<Eigen::Index>(n)), "ones");
  for (std::size_t d = 1; d < n && !s.exhausted(); ++d) {
    if (n % d != 0) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; i += d) idx.push_back(i);
    s.evaluate(indicator(n, idx), "progression:" + std::to_string(d));
  }
  if (std::has_single_bit(n)) {
    for (std::size_t mask = 1; mask < n && !s.exhausted(); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if ((i & mask) == 0) idx.push_back(i);
      }
      s.evaluate(indicator(n, idx), "subcube:" + std::to_string(mask));
    }
  }
  for (std::size_t i = 0; i < n && !s.exhausted(); ++i) {
    s.evaluate(delta_vector(n, i), "delta:" + std::to_string(i));
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t restart = 0; !s.exhausted(); ++restart) {
    std::mt19937_64 rng(trial_seed(options.seed, restart));
    ComplexVector v(static_cast<Eigen::Index>(n));
    if (restart % 2 == 0) {
      for (auto& x : v) x = unit(rng);
      s.descend(v, "restart");
    } else {
      // Phase perturbation of the incumbent.
      v = s.best();
      for (auto& x : v) {
        if (unit(rng) < 0.5) x *= std::polar(1.0, 2.0 * M_PI * unit(rng));
      }
      s.evaluate(v, "phase");
    }
  }
  return std::move(s).finish();
}

}  // namespace khup
