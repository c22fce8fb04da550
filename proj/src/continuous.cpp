#include "khup/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace khup {

namespace {

constexpr double kPi = std::numbers::pi;

double q_context(NormIndex q) {
  return q.is_infinite() ? std::numeric_limits<double>::infinity() : q.value();
}

void require_q_above_one(NormIndex q, const char* who) {
  if (!q.is_infinite() && !(q.value() > 1.0)) {
    throw std::invalid_argument(std::string(who) + ": q must lie in (1, inf]");
  }
}

void require_nonzero(const GridFunction& f, const char* who) {
  require_finite(f.samples, who);
  if (f.samples.cwiseAbs().maxCoeff() == 0.0) throw std::invalid_argument(std::string(who) + ": zero function");
}

double measure_support(const GridFunction& f, double threshold) {
  const double cut = threshold * f.samples.cwiseAbs().maxCoeff();
  std::size_t count = 0;
  for (const auto& z : f.samples)
    if (std::abs(z) > cut) ++count;
  return f.dx * static_cast<double>(count);
}

// Smallest odd 5-smooth integer >= m: keeps x = 0 and xi = 0 on the grid
// and FFT sizes cheap.
std::size_t odd_smooth_at_least(std::size_t m) {
  std::size_t best = 0;
  for (std::size_t p3 = 1; p3 < 8 * m + 8; p3 *= 3) {
    for (std::size_t v = p3; ; v *= 5) {
      if (v >= m) {
        if (best == 0 || v < best) best = v;
        break;
      }
    }
  }
  return best;
}

}  // namespace

Complex gaussian(double x) { return std::exp(-kPi * x * x); }

GridFunction random_smooth_function(std::uint64_t seed, std::size_t n, double half_width) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_real_distribution<double> center(-2.0, 2.0), width(0.3, 1.5), unit(0.0, 1.0);
  struct Bump {
    double mu, sigma;
    Complex w;
  };
  std::vector<Bump> bumps(static_cast<std::size_t>(count(rng)));
  for (auto& bmp : bumps) {
    bmp.mu = center(rng);
    bmp.sigma = width(rng);
    const double mag = 0.2 + unit(rng);
    bmp.w = std::polar(mag, 2.0 * kPi * unit(rng));
  }
  return sample(
      [&](double x) {
        Complex acc = 0.0;
        for (const auto& bmp : bumps) {
          const double t = (x - bmp.mu) / bmp.sigma;
          acc += bmp.w * std::exp(-kPi * t * t);
        }
        return acc;
      },
      n, half_width);
}

GridOperator GridOperator::lct(const LCTParams& m) {
  m.validate();
  GridOperator op;
  op.lct_ = true;
  op.m_ = m;
  return op;
}

GridOperator GridOperator::parse(const std::string& spec) {
  if (spec == "ft" || spec == "fourier") return fourier();
  if (spec.starts_with("lct:")) {
    std::stringstream ss(spec.substr(4));
    std::vector<double> v;
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
    if (v.size() != 4) throw std::invalid_argument("transform 'lct:a,b,c,d' needs four numbers");
    return lct({v[0], v[1], v[2], v[3]});
  }
  throw std::invalid_argument("unknown transform '" + spec + "'; valid: ft, lct:a,b,c,d");
}

GridFunction GridOperator::apply(const GridFunction& f, DftMethod method) const {
  if (!lct_) return ft_grid(f, method);
  GridFunction out = lct_apply(m_, f, method);
  out.samples *= std::sqrt(std::abs(m_.b));
  return out;
}

std::string GridOperator::name() const {
  if (!lct_) return "ft";
  std::ostringstream os;
  os.precision(12);
  os << "lct:" << m_.a << "," << m_.b << "," << m_.c << "," << m_.d;
  return os.str();
}

InequalityReport primary_up_grid_check(const GridFunction& f, const GridOperator& op, double tol) {
  require_nonzero(f, "primary_up_grid_check");
  const GridFunction af = op.apply(f);
  const double lhs = grid_norm(f, kL1) * grid_norm(af, kL1);
  const double rhs = op.k() * grid_norm(f, kLinf) * grid_norm(af, kLinf);
  auto r = make_report("primary-up-grid", lhs, rhs, tol);
  r.context["k"] = op.k();
  r.context["n"] = static_cast<double>(f.size());
  return r;
}

InequalityReport norm_up_grid_check(const GridFunction& f, const GridOperator& op, NormIndex q,
                                    double tol) {
  require_nonzero(f, "norm_up_grid_check");
  const GridFunction af = op.apply(f);
  const double lhs = grid_norm(f, kL1) * grid_norm(af, kL1);
  const double rhs = std::pow(op.k(), q.one_minus_reciprocal()) * grid_norm(f, q) * grid_norm(af, q);
  auto r = make_report("norm-up-grid", lhs, rhs, tol);
  r.context["k"] = op.k();
  r.context["q"] = q_context(q);
  return r;
}

InequalityReport support_measure_check(const GridFunction& f, const GridOperator& op,
                                       double threshold, double tol) {
  require_nonzero(f, "support_measure_check");
  if (!(threshold > 0 && threshold < 1)) {
    throw std::invalid_argument("support_measure_check: threshold must lie in (0, 1)");
  }
  const GridFunction af = op.apply(f);
  const double sf = measure_support(f, threshold);
  const double saf = measure_support(af, threshold);
  auto r = make_report("support-measure", sf * saf, op.k(), tol);
  r.context["k"] = op.k();
  r.context["threshold"] = threshold;
  r.context["supp_f"] = sf;
  r.context["supp_Af"] = saf;
  r.context["product_at_1e-4"] = measure_support(f, 1e-4) * measure_support(af, 1e-4);
  r.context["product_at_1e-8"] = measure_support(f, 1e-8) * measure_support(af, 1e-8);
  r.notes.push_back("supports are thresholded sample counts, an estimate of Lebesgue measure");
  return r;
}

double heisenberg_constant(NormIndex q) {
  require_q_above_one(q, "heisenberg_constant");
  if (q.is_infinite()) return std::pow(2.0, -10.0);
  const double qv = q.value();
  return std::pow(2.0, -(10.0 * qv - 8.0) / (qv - 1.0));
}

InequalityReport heisenberg_q_check(const GridFunction& f, const GridOperator& op, NormIndex q,
                                    double tol) {
  require_q_above_one(q, "heisenberg_q_check");
  require_nonzero(f, "heisenberg_q_check");
  const GridFunction af = op.apply(f);
  const double cq = heisenberg_constant(q);
  const double kexp = 3.0 - 2.0 * q.reciprocal();
  const double nf = grid_norm(f, q), naf = grid_norm(af, q);
  const double lhs = variance(f) * variance(af);
  const double rhs = cq * std::pow(op.k(), kexp) * nf * nf * naf * naf;
  auto r = make_report("heisenberg-q", lhs, rhs, tol);
  r.context["k"] = op.k();
  r.context["q"] = q_context(q);
  r.context["C_q"] = cq;
  r.context["tail_f"] = tail_fraction(f);
  r.context["tail_Af"] = tail_fraction(af);
  return r;
}

InequalityReport variance_ratio_bound_check(const GridFunction& g, NormIndex q, double tol) {
  require_q_above_one(q, "variance_ratio_bound_check");
  require_nonzero(g, "variance_ratio_bound_check");
  const double nq = grid_norm(g, q);
  const double lhs = grid_norm(g, kL1) / nq;
  double two_exp = 5.0, outer = 1.0 / 3.0;
  if (!q.is_infinite()) {
    const double qv = q.value();
    two_exp = (5.0 * qv - 4.0) / (qv - 1.0);
    outer = (qv - 1.0) / (3.0 * qv - 2.0);
  }
  const double rhs = std::pow(std::pow(2.0, two_exp) * variance(g) / (nq * nq), outer);
  auto r = make_report("variance-bound", lhs, rhs, tol, Relation::AtMost, 1.0);
  r.context["q"] = q_context(q);
  return r;
}

double moment_exponent(double r, NormIndex q) {
  if (!(r > 1.0)) throw std::invalid_argument("moment order must exceed 1");
  if (q.is_infinite()) return 1.0 / (r + 1.0);
  const double qv = q.value();
  return (qv - 1.0) / (qv * r + qv - 2.0);
}

double moment_constant(double r, NormIndex q) {
  require_q_above_one(q, "moment_constant");
  const double e = moment_exponent(r, q);
  double two_exp = (2.0 * r + 1.0) / (r + 1.0);
  if (!q.is_infinite()) {
    const double qv = q.value();
    two_exp = (2.0 * qv * r + qv - r - 2.0) / (qv * r + qv - 2.0);
  }
  return std::pow(r - 1.0, e) * std::pow(2.0, -two_exp);
}

InequalityReport moment_up_check(const GridFunction& f, const GridOperator& op, double r, double s,
                                 NormIndex q, double tol) {
  require_q_above_one(q, "moment_up_check");
  require_nonzero(f, "moment_up_check");
  if (!(r > 1.0) || !(s > 1.0)) throw std::invalid_argument("moment_up_check: r, s must exceed 1");
  const GridFunction af = op.apply(f);
  const double er = moment_exponent(r, q), es = moment_exponent(s, q);
  const double lhs = std::pow(moment(f, r), er) * std::pow(moment(af, s), es);
  const double rhs = moment_constant(r, q) * moment_constant(s, q) *
                     std::pow(op.k(), q.one_minus_reciprocal()) *
                     std::pow(grid_norm(f, q), 2.0 * er) * std::pow(grid_norm(af, q), 2.0 * es);
  auto res = make_report("moment-up", lhs, rhs, tol);
  res.context["k"] = op.k();
  res.context["r"] = r;
  res.context["s"] = s;
  res.context["q"] = q_context(q);
  return res;
}

InequalityReport moment_up_corollary_check(const GridFunction& f, const GridOperator& op, double r,
                                           NormIndex q, double tol) {
  require_q_above_one(q, "moment_up_corollary_check");
  require_nonzero(f, "moment_up_corollary_check");
  const GridFunction af = op.apply(f);
  const double inv_e = 1.0 / moment_exponent(r, q);  // (qr+q-2)/(q-1)
  const double kexp = q.is_infinite() ? r + 1.0 : (q.value() * r + q.value() - 2.0) / q.value();
  const double c_prime = std::pow(moment_constant(r, q), 2.0 * inv_e);
  const double nf = grid_norm(f, q), naf = grid_norm(af, q);
  const double lhs = moment(f, r) * moment(af, r);
  const double rhs = c_prime * std::pow(op.k(), kexp) * nf * nf * naf * naf;
  auto res = make_report("moment-up-corollary", lhs, rhs, tol);
  res.context["k"] = op.k();
  res.context["r"] = r;
  res.context["q"] = q_context(q);
  res.context["C_prime"] = c_prime;
  return res;
}

double f_functional(const GridFunction& f, const GridFunction& fhat) {
  const double n2 = grid_norm(f, kL2);
  return grid_norm(f, kLinf) * grid_norm(fhat, kLinf) / (n2 * n2);
}

double fq_functional(const GridFunction& f, const GridFunction& fhat, NormIndex q) {
  const double n2 = grid_norm(f, kL2);
  return grid_norm(f, q) * grid_norm(fhat, q) / (n2 * n2);
}

double family_fab_closed_form(double a, double b) {
  return std::sqrt(2.0 * (a * a - b * b) / (a * a + b * b));
}

FamilyResult family_fab(double a, double b, std::size_t samples) {
  if (!(b > 0 && a > b)) throw std::invalid_argument("family_fab: need a > b > 0");
  const double d2 = a * a - b * b, s2 = a * a + b * b;
  const double half = 5.0 / std::sqrt(d2);
  if (samples == 0) {
    samples = odd_smooth_at_least(static_cast<std::size_t>(std::ceil(100.0 * s2 / d2)) + 1);
    samples = std::max<std::size_t>(samples, 1025);
  }
  const Complex w(a, b);
  FamilyResult out;
  out.f = sample([&](double x) { return std::exp(-kPi * (w * x) * (w * x)); }, samples, half);
  out.fhat = ft_grid(out.f);
  double err = 0.0, peak = 0.0;
  for (std::size_t j = 0; j < out.fhat.size(); ++j) {
    const double xi = out.fhat.x(j);
    const Complex exact = std::exp(-kPi * (xi / w) * (xi / w)) / w;
    err = std::max(err, std::abs(out.fhat.samples[static_cast<Eigen::Index>(j)] - exact));
    peak = std::max(peak, std::abs(exact));
  }
  out.transform_error = err / peak;
  out.f_numeric = f_functional(out.f, out.fhat);
  out.f_closed = family_fab_closed_form(a, b);
  const double n2 = grid_norm(out.f, kL2);
  out.norm2_sq_numeric = n2 * n2;
  out.norm2_sq_closed = 1.0 / std::sqrt(2.0 * d2);
  out.report = make_report("family-fab", out.f_numeric, out.f_closed, 1e-3, Relation::Match);
  out.report.context["a"] = a;
  out.report.context["b"] = b;
  out.report.context["n"] = static_cast<double>(samples);
  out.report.context["transform_error"] = out.transform_error;
  out.report.context["norm2_sq_numeric"] = out.norm2_sq_numeric;
  out.report.context["norm2_sq_closed"] = out.norm2_sq_closed;
  return out;
}

double family_gc_closed_form(double c) {
  return (c + 2.0 + 1.0 / c) / (std::sqrt(2.0) + 2.0 * c / std::sqrt(c * c * c * c + 1.0));
}

FamilyResult family_gc(double c, std::size_t samples) {
  if (!(c > 0)) throw std::invalid_argument("family_gc: need c > 0");
  const double spread = std::max(c, 1.0 / c);
  if (samples == 0) {
    samples = odd_smooth_at_least(static_cast<std::size_t>(std::ceil(100.0 * spread * spread)) + 1);
    samples = std::max<std::size_t>(samples, 1025);
  }
  // dx = 1/sqrt(n) makes the dual grid coincide with the primal one.
  const double half = std::sqrt(static_cast<double>(samples)) / 2.0;
  const double rc = std::sqrt(c);
  auto g = [&](double x) {
    return Complex(std::exp(-kPi * (x / c) * (x / c)) / rc + rc * std::exp(-kPi * (c * x) * (c * x)), 0.0);
  };
  FamilyResult out;
  out.f = sample(g, samples, half);
  out.fhat = ft_grid(out.f);
  out.transform_error = (out.fhat.samples - out.f.samples).cwiseAbs().maxCoeff() /
                        out.f.samples.cwiseAbs().maxCoeff();
  out.f_numeric = f_functional(out.f, out.fhat);
  out.f_closed = family_gc_closed_form(c);
  const double n2 = grid_norm(out.f, kL2);
  out.norm2_sq_numeric = n2 * n2;
  out.norm2_sq_closed = std::sqrt(2.0) + 2.0 * c / std::sqrt(c * c * c * c + 1.0);
  out.report = make_report("family-gc", out.f_numeric, out.f_closed, 1e-3, Relation::Match);
  out.report.context["c"] = c;
  out.report.context["n"] = static_cast<double>(samples);
  out.report.context["self_dual_error"] = out.transform_error;
  return out;
}

CoverageResult f_coverage_sweep(const std::vector<double>& a_values,
                                const std::vector<double>& c_values, double target_lo,
                                double target_hi) {
  if (a_values.empty() && c_values.empty()) throw std::invalid_argument("f_coverage_sweep: empty grid");
  CoverageResult out;
  out.rows.resize(a_values.size() + c_values.size());
  const auto na = static_cast<std::ptrdiff_t>(a_values.size());
  const auto total = static_cast<std::ptrdiff_t>(out.rows.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    CoverageRow row;
    FamilyResult fr;
    if (i < na) {
      const double a = a_values[static_cast<std::size_t>(i)];
      fr = family_fab(a, std::sqrt(a * a - 1.0));
      row.family = "fab";
      row.parameter = a;
    } else {
      const double c = c_values[static_cast<std::size_t>(i - na)];
      fr = family_gc(c);
      row.family = "gc";
      row.parameter = c;
    }
    row.f_numeric = fr.f_numeric;
    row.f_closed = fr.f_closed;
    row.pass = fr.report.pass;
    out.rows[static_cast<std::size_t>(i)] = row;
  }

  out.min_value = std::numeric_limits<double>::infinity();
  out.max_value = 0.0;
  bool all_match = true;
  for (const auto& r : out.rows) {
    out.min_value = std::min(out.min_value, r.f_numeric);
    out.max_value = std::max(out.max_value, r.f_numeric);
    all_match = all_match && r.pass;
  }
  auto monotone = [&](const std::string& fam, bool increasing, double min_param) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : out.rows)
      if (r.family == fam && r.parameter >= min_param) pts.emplace_back(r.parameter, r.f_numeric);
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (increasing ? pts[i].second <= pts[i - 1].second : pts[i].second >= pts[i - 1].second) return false;
    }
    return true;
  };
  out.fab_monotone = monotone("fab", false, 0.0);
  out.gc_monotone = monotone("gc", true, 1.0);

  // lhs/rhs encode the covered span relative to the target span.
  const double covered = std::min(target_lo / out.min_value, out.max_value / target_hi);
  out.report = make_report("f-coverage", covered, 1.0, 0.0);
  out.report.context["min_F"] = out.min_value;
  out.report.context["max_F"] = out.max_value;
  out.report.context["target_lo"] = target_lo;
  out.report.context["target_hi"] = target_hi;
  out.report.pass = out.report.pass && all_match && out.fab_monotone && out.gc_monotone;
  if (!all_match) out.report.notes.push_back("a family value misses its closed form by more than 1e-3");
  if (!out.fab_monotone || !out.gc_monotone) out.report.notes.push_back("family values not monotone");
  return out;
}

std::vector<FqRow> fq_exploration(NormIndex q, const std::vector<double>& a_values,
                                  const std::vector<double>& c_values) {
  std::vector<FqRow> rows;
  for (double a : a_values) {
    const auto fr = family_fab(a, std::sqrt(a * a - 1.0));
    rows.push_back({"fab", a, fq_functional(fr.f, fr.fhat, q)});
  }
  for (double c : c_values) {
    const auto fr = family_gc(c);
    rows.push_back({"gc", c, fq_functional(fr.f, fr.fhat, q)});
  }
  return rows;
}

}  // namespace khup
