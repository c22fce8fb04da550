#include "run.hpp"

#include "json_io.hpp"
#include "specs.hpp"

#include "khup/continuous.hpp"
#include "khup/finite_up.hpp"
#include "khup/nonabelian.hpp"
#include "khup/parallel.hpp"
#include "khup/search.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace khup::cli {

namespace {

constexpr const char* kVersion = "0.1.0";
const double kUnset = std::numeric_limits<double>::quiet_NaN();

enum class Kind { Matrix, Vector, Counterexample, Group, Grid, Family, Coverage };

struct CheckInfo {
  std::string id;  // canonical theorem id
  Kind kind;
};

const std::map<std::string, CheckInfo>& check_table() {
  static const std::map<std::string, CheckInfo> t = {
      {"primary-up", {"primary-up", Kind::Matrix}},
      {"support-up", {"support-up", Kind::Matrix}},
      {"donoho-stark", {"support-up", Kind::Matrix}},
      {"approx-support-l1", {"approx-support-l1", Kind::Matrix}},
      {"approx-support-l2", {"approx-support-l2", Kind::Matrix}},
      {"supp1-vs-supp2", {"supp1-vs-supp2", Kind::Vector}},
      {"norm-up", {"norm-up-p1", Kind::Matrix}},
      {"norm-up-p1", {"norm-up-p1", Kind::Matrix}},
      {"hausdorff-young", {"hausdorff-young", Kind::Matrix}},
      {"norm-up-midrange", {"norm-up-midrange", Kind::Matrix}},
      {"counterexample", {"no-norm-up-p-geq-2", Kind::Counterexample}},
      {"no-norm-up-p-geq-2", {"no-norm-up-p-geq-2", Kind::Counterexample}},
      {"meshulam", {"meshulam", Kind::Group}},
      {"min-support-up", {"min-support-up", Kind::Group}},
      {"factor-4", {"factor-4", Kind::Group}},
      {"kuperberg", {"kuperberg", Kind::Group}},
      {"n2-hadamard", {"n2-hadamard", Kind::Group}},
      {"primary-up-grid", {"primary-up-grid", Kind::Grid}},
      {"norm-up-grid", {"norm-up-grid", Kind::Grid}},
      {"support-measure", {"support-measure", Kind::Grid}},
      {"heisenberg-q", {"heisenberg-q", Kind::Grid}},
      {"variance-bound", {"variance-bound", Kind::Grid}},
      {"moment-up", {"moment-up", Kind::Grid}},
      {"moment-up-corollary", {"moment-up-corollary", Kind::Grid}},
      {"family-fab", {"family-fab", Kind::Family}},
      {"family-gc", {"family-gc", Kind::Family}},
      {"f-coverage", {"f-coverage", Kind::Coverage}},
  };
  return t;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

// One grid point of a sweep.
struct Point {
  double n = kUnset, p = 1.5, q = 2.0, eps = 0.1, eta = 0.1, r = 2.0, s = 2.0;
  double a = kUnset, b = kUnset, c = kUnset;
  std::optional<std::size_t> trial;
};

// Shared, read-only state built once before any point runs.
struct Context {
  const RunConfig* cfg = nullptr;
  std::optional<BuiltMatrix> matrix;
  std::optional<KHadamardCertificate> cert;
  std::optional<GroupWithIrreps> group;
  std::optional<GridOperator> op;
};

GridOperator resolve_operator(const RunConfig& cfg) {
  if (cfg.lct) return GridOperator::parse("lct:" + *cfg.lct);
  if (cfg.transform) return GridOperator::parse(*cfg.transform);
  return GridOperator::fourier();
}

Context prepare(const RunConfig& cfg, Kind kind) {
  Context ctx;
  ctx.cfg = &cfg;
  if (kind == Kind::Matrix || (kind == Kind::Vector && (cfg.construct || cfg.matrix_file || cfg.group))) {
    ctx.matrix = build_matrix(cfg);
    ctx.cert = certify_k_hadamard(ctx.matrix->a, cfg.tol);
  }
  if (kind == Kind::Group) {
    if (!cfg.group) throw std::invalid_argument("this check needs --group (e.g. S3, Q8, D4, Z6, 2,3 or file:path)");
    ctx.group = resolve_group(*cfg.group);
  }
  if (kind == Kind::Grid) ctx.op = resolve_operator(cfg);
  return ctx;
}

ComplexVector point_vector(const Context& ctx, const Point& pt, std::size_t n,
                           const FiniteAbelianGroup* ab, const FiniteGroup* g) {
  if (pt.trial) {
    std::mt19937_64 rng(trial_seed(ctx.cfg->seed, *pt.trial));
    return random_test_vector(n, rng);
  }
  const std::string spec = ctx.cfg->vector.value_or("random:" + std::to_string(ctx.cfg->seed));
  return parse_vector(spec, n, ab, g);
}

GridFunction point_function(const Context& ctx, const Point& pt) {
  const auto& cfg = *ctx.cfg;
  if (pt.trial) {
    return random_smooth_function(trial_seed(cfg.seed, *pt.trial), cfg.samples, cfg.halfwidth);
  }
  return build_grid_function(cfg.function.value_or("gaussian"), cfg, pt.a, pt.b, pt.c);
}

InequalityReport run_point(const std::string& name, const Context& ctx, const Point& pt) {
  const auto& info = check_table().at(name);
  const auto& cfg = *ctx.cfg;
  const double tol = cfg.tol;
  switch (info.kind) {
    case Kind::Matrix: {
      const auto& a = ctx.matrix->a;
      const auto& cert = *ctx.cert;
      const auto* ab = ctx.matrix->group ? &*ctx.matrix->group : nullptr;
      const ComplexVector v = point_vector(ctx, pt, static_cast<std::size_t>(a.cols()), ab, nullptr);
      const auto& id = info.id;
      if (id == "primary-up") return primary_up_check(a, cert, v, tol);
      if (id == "support-up") return support_up_check(a, cert, v, tol);
      if (id == "approx-support-l1") return approx_support_l1_check(a, cert, v, pt.eps, pt.eta, tol);
      if (id == "approx-support-l2") return approx_support_l2_check(a, cert, v, pt.eps, pt.eta, tol);
      if (id == "norm-up-p1") return norm_up_check(a, cert, v, norm_index(pt.q), tol);
      if (id == "hausdorff-young") return hausdorff_young_check(a, cert, v, pt.p, tol);
      return norm_up_midrange_check(a, cert, v, pt.p, norm_index(pt.q), tol);
    }
    case Kind::Vector: {
      std::size_t n = 0;
      const FiniteAbelianGroup* ab = nullptr;
      if (ctx.matrix) {
        n = static_cast<std::size_t>(ctx.matrix->a.cols());
        ab = ctx.matrix->group ? &*ctx.matrix->group : nullptr;
      } else if (!std::isnan(pt.n)) {
        n = static_cast<std::size_t>(pt.n);
      } else {
        throw std::invalid_argument("supp1-vs-supp2 needs --n or an operator");
      }
      return supp1_vs_supp2_check(point_vector(ctx, pt, n, ab, nullptr), pt.eps);
    }
    case Kind::Counterexample: {
      std::vector<int> factors;
      if (!std::isnan(pt.n)) factors = {static_cast<int>(pt.n)};
      else if (cfg.group && is_factor_list(*cfg.group)) factors = parse_int_list(*cfg.group, "--group");
      else throw std::invalid_argument("counterexample needs --n or --group factors");
      const double p = cfg.p ? pt.p : 2.0;
      const double q = cfg.q ? pt.q : std::numeric_limits<double>::infinity();
      auto res = p_geq_2_counterexample(FiniteAbelianGroup(factors), norm_index(p), norm_index(q), tol);
      if (res.eigen_residual >= 1e-9 * std::sqrt(static_cast<double>(res.v.size()))) {
        res.report.pass = false;
        res.report.notes.push_back("eigenvector relation Av = sqrt(n) v failed");
      }
      return res.report;
    }
    case Kind::Group: {
      const auto& g = ctx.group->group;
      const auto* cat = ctx.group->irreps ? &*ctx.group->irreps : nullptr;
      if (info.id == "n2-hadamard") {
        if (!cat) throw std::invalid_argument("n2-hadamard needs a group with irreps");
        const std::size_t trials = cfg.trials ? cfg.trials : 100;
        return n2_hadamard_check(g, *cat, trials, pt.trial ? trial_seed(cfg.seed, *pt.trial) : cfg.seed, tol).report;
      }
      const GroupFunction f = point_vector(ctx, pt, g.order(), nullptr, &g);
      if (info.id == "meshulam") return meshulam_check(g, f, tol);
      if (info.id == "factor-4") return factor4_check(g, f, tol);
      if (info.id == "kuperberg") return kuperberg_check(g, f, cat, tol);
      if (!cat) throw std::invalid_argument("min-support-up needs a group with irreps");
      return min_support_up_check(g, *cat, f, tol);
    }
    case Kind::Grid: {
      const GridFunction f = point_function(ctx, pt);
      const auto& op = *ctx.op;
      const auto& id = info.id;
      InequalityReport r;
      if (id == "primary-up-grid") r = primary_up_grid_check(f, op, tol);
      else if (id == "norm-up-grid") r = norm_up_grid_check(f, op, norm_index(pt.q), tol);
      else if (id == "support-measure") r = support_measure_check(f, op, cfg.threshold, tol);
      else if (id == "heisenberg-q") r = heisenberg_q_check(f, op, norm_index(pt.q), tol);
      else if (id == "variance-bound") r = variance_ratio_bound_check(f, norm_index(pt.q), tol);
      else if (id == "moment-up") r = moment_up_check(f, op, pt.r, pt.s, norm_index(pt.q), tol);
      else r = moment_up_corollary_check(f, op, pt.r, norm_index(pt.q), tol);
      r.context["n_samples"] = static_cast<double>(f.size());
      return r;
    }
    case Kind::Family: {
      const std::size_t fixed = cfg.samples_set ? cfg.samples : 0;
      if (info.id == "family-fab") {
        if (std::isnan(pt.a)) throw std::invalid_argument("family-fab needs --a (and --b; default sqrt(a^2-1))");
        const double b = std::isnan(pt.b) ? std::sqrt(pt.a * pt.a - 1.0) : pt.b;
        return family_fab(pt.a, b, fixed).report;
      }
      if (std::isnan(pt.c)) throw std::invalid_argument("family-gc needs --c");
      return family_gc(pt.c, fixed).report;
    }
    case Kind::Coverage: {
      const auto as = cfg.a ? parse_grid(*cfg.a, "--a") : std::vector<double>{1.02, 1.05, 1.2, 1.5, 2, 3, 5, 8, 12, 16, 20, 25};
      const auto cs = cfg.c ? parse_grid(*cfg.c, "--c") : std::vector<double>{1, 1.5, 2, 3, 5, 8, 12, 16, 20, 25, 30};
      return f_coverage_sweep(as, cs).report;
    }
  }
  throw std::logic_error("unhandled check kind");
}

// Quadrature-class reports (closed-form matches) warn instead of failing.
bool is_violation(const InequalityReport& r) { return !r.pass && r.relation != Relation::Match; }

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json environment() { return {{"program", "khup"}, {"version", kVersion}}; }

struct Output {
  std::ostream* stream;
  std::ofstream file;
  explicit Output(const RunConfig& cfg, std::ostream& fallback) : stream(&fallback) {
    if (cfg.out) {
      file.open(*cfg.out);
      if (!file) throw std::invalid_argument("cannot write '" + *cfg.out + "'");
      stream = &file;
    }
  }
};

Format format_for(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

int exit_for(const std::vector<InequalityReport>& reports, std::ostream& err) {
  int code = kExitPass;
  for (const auto& r : reports) {
    if (is_violation(r)) {
      err << "violation: " << r.theorem_id << " ratio " << fmt(r.ratio) << "\n";
      code = kExitViolation;
    } else if (!r.pass) {
      err << "warning: " << r.theorem_id << " misses its closed form (ratio " << fmt(r.ratio) << ")\n";
    }
  }
  return code;
}

Json reports_json(const std::vector<InequalityReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr;
}

Json warnings_json(const std::vector<InequalityReport>& reports) {
  Json w = Json::array();
  for (const auto& r : reports)
    if (!r.pass && r.relation == Relation::Match) w.push_back(r.theorem_id + ": quadrature mismatch beyond tolerance");
  return w;
}

void write_report_csv(std::ostream& os, const std::vector<InequalityReport>& reports, std::uint64_t seed) {
  os << "theorem_id,lhs,rhs,ratio,pass,seed\n";
  for (const auto& r : reports) {
    os << r.theorem_id << "," << fmt(r.lhs) << "," << fmt(r.rhs) << "," << fmt(r.ratio) << ","
       << (r.pass ? "true" : "false") << "," << seed << "\n";
  }
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const auto built = build_matrix(cfg);
  Output o(cfg, out);
  if (format_for(cfg, Format::Json) == Format::Csv) {
    *o.stream << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < built.a.rows(); ++i)
      for (Eigen::Index j = 0; j < built.a.cols(); ++j)
        *o.stream << i << "," << j << "," << fmt(built.a(i, j).real()) << "," << fmt(built.a(i, j).imag()) << "\n";
    return kExitPass;
  }
  Json j = matrix_to_json(built.a);
  j["construction"] = built.description;
  j["seed"] = cfg.seed;
  *o.stream << j.dump() << "\n";
  return kExitPass;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  const auto built = build_matrix(cfg);
  const auto cert = certify_k_hadamard(built.a, cfg.tol);
  Output o(cfg, out);
  if (format_for(cfg, Format::Json) == Format::Csv) {
    *o.stream << "construction,rows,cols,k,entry_bound,unitary_defect,gram_inverse_norm,is_unitary_scaled,singular,certified,seed\n"
              << built.description << "," << built.a.rows() << "," << built.a.cols() << "," << fmt(cert.k) << ","
              << fmt(cert.entry_bound) << "," << fmt(cert.unitary_defect) << "," << fmt(cert.gram_inverse_norm) << ","
              << (cert.is_unitary_scaled ? "true" : "false") << "," << (cert.singular ? "true" : "false") << ","
              << (cert.certified() ? "true" : "false") << "," << cfg.seed << "\n";
    return kExitPass;
  }
  Json j = {{"command", "certify"}, {"construction", built.description}, {"rows", built.a.rows()},
            {"cols", built.a.cols()}, {"seed", cfg.seed}, {"certificate", certificate_to_json(cert)},
            {"environment", environment()}};
  *o.stream << j.dump(2) << "\n";
  return kExitPass;
}

Point scalar_point(const RunConfig& cfg) {
  Point pt;
  auto set = [](const std::optional<std::string>& v, double& dst, const char* flag) {
    if (v) dst = parse_scalar(*v, flag);
  };
  set(cfg.n, pt.n, "--n");
  set(cfg.p, pt.p, "--p");
  set(cfg.q, pt.q, "--q");
  set(cfg.eps, pt.eps, "--eps");
  set(cfg.eta, pt.eta, "--eta");
  set(cfg.r, pt.r, "--r");
  set(cfg.s, pt.s, "--s");
  set(cfg.a, pt.a, "--a");
  set(cfg.b, pt.b, "--b");
  set(cfg.c, pt.c, "--c");
  return pt;
}

const CheckInfo& lookup(const std::string& name) {
  const auto& t = check_table();
  const auto it = t.find(name);
  if (it == t.end()) throw std::invalid_argument("unknown check '" + name + "'; valid: " + join_names(check_names()));
  return it->second;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& info = lookup(cfg.name);
  const Context ctx = prepare(cfg, info.kind);
  const Point pt = scalar_point(info.kind == Kind::Coverage ? RunConfig{} : cfg);
  const std::vector<InequalityReport> reports = {run_point(cfg.name, ctx, pt)};
  Output o(cfg, out);
  if (format_for(cfg, Format::Json) == Format::Csv) {
    write_report_csv(*o.stream, reports, cfg.seed);
  } else {
    Json j = {{"command", "check"}, {"name", cfg.name}, {"seed", cfg.seed}, {"tol", cfg.tol}};
    if (ctx.matrix) {
      j["operator"] = ctx.matrix->description;
      j["certificate"] = certificate_to_json(*ctx.cert);
    }
    if (ctx.group) j["group"] = ctx.group->name;
    if (ctx.op) j["transform"] = ctx.op->name();
    j["reports"] = reports_json(reports);
    j["warnings"] = warnings_json(reports);
    j["environment"] = environment();
    *o.stream << j.dump(2) << "\n";
  }
  return exit_for(reports, err);
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& info = lookup(cfg.name);
  if (info.kind == Kind::Coverage) throw std::invalid_argument("f-coverage is a single check; use `check f-coverage`");
  const Context ctx = prepare(cfg, info.kind);

  struct Axis {
    const char* name;
    double Point::*field;
    const std::optional<std::string>* text;
  };
  const std::vector<Axis> axes = {{"n", &Point::n, &cfg.n},     {"p", &Point::p, &cfg.p},
                                  {"q", &Point::q, &cfg.q},     {"eps", &Point::eps, &cfg.eps},
                                  {"eta", &Point::eta, &cfg.eta}, {"r", &Point::r, &cfg.r},
                                  {"s", &Point::s, &cfg.s},     {"a", &Point::a, &cfg.a},
                                  {"b", &Point::b, &cfg.b},     {"c", &Point::c, &cfg.c}};
  std::vector<Point> points(1);
  std::vector<const Axis*> columns;
  for (const auto& ax : axes) {
    if (!*ax.text) continue;
    const std::string flag = std::string("--") + ax.name;
    const auto values = parse_grid(**ax.text, flag.c_str());
    columns.push_back(&ax);
    std::vector<Point> next;
    for (const auto& base : points)
      for (double v : values) {
        Point p = base;
        p.*(ax.field) = v;
        next.push_back(p);
      }
    points = std::move(next);
  }
  const bool trial_axis = cfg.trials > 0 && info.id != "n2-hadamard";
  if (trial_axis) {
    std::vector<Point> next;
    for (const auto& base : points)
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        Point p = base;
        p.trial = t;
        next.push_back(p);
      }
    points = std::move(next);
  }
  if (points.empty()) throw std::invalid_argument("sweep: empty grid");

  std::vector<InequalityReport> reports(points.size());
  std::vector<std::string> errors(points.size());
  const auto count = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      reports[idx] = run_point(cfg.name, ctx, points[idx]);
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) throw std::invalid_argument("sweep row " + std::to_string(i) + ": " + errors[i]);
  }

  Output o(cfg, out);
  if (format_for(cfg, Format::Csv) == Format::Csv) {
    auto& os = *o.stream;
    os << "theorem_id";
    for (const auto* c : columns) os << "," << c->name;
    if (trial_axis) os << ",trial";
    os << ",lhs,rhs,ratio,pass,seed\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& r = reports[i];
      os << r.theorem_id;
      for (const auto* c : columns) os << "," << fmt(points[i].*(c->field));
      if (trial_axis) os << "," << *points[i].trial;
      os << "," << fmt(r.lhs) << "," << fmt(r.rhs) << "," << fmt(r.ratio) << "," << (r.pass ? "true" : "false")
         << "," << cfg.seed << "\n";
    }
  } else {
    Json rows = Json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      Json params = Json::object();
      for (const auto* c : columns) params[c->name] = number(points[i].*(c->field));
      if (trial_axis) params["trial"] = *points[i].trial;
      rows.push_back({{"params", std::move(params)}, {"report", report_to_json(reports[i])}});
    }
    Json j = {{"command", "sweep"}, {"name", cfg.name}, {"seed", cfg.seed}, {"tol", cfg.tol},
              {"rows", std::move(rows)}, {"warnings", warnings_json(reports)}, {"environment", environment()}};
    *o.stream << j.dump(2) << "\n";
  }
  return exit_for(reports, err);
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  const auto built = build_matrix(cfg);
  const auto cert = certify_k_hadamard(built.a, cfg.tol);
  SearchOptions opt;
  opt.budget = cfg.budget;
  opt.seed = cfg.seed;
  if (cfg.eps) opt.eps = parse_scalar(*cfg.eps, "--eps");
  const auto res = extremal_search(built.a, cert, parse_objective(cfg.objective), opt);
  Output o(cfg, out);
  if (format_for(cfg, Format::Json) == Format::Csv) {
    *o.stream << "objective,origin,evaluations,ratio,seed\n"
              << objective_name(parse_objective(cfg.objective)) << "," << res.origin << "," << res.evaluations << ","
              << fmt(res.report.ratio) << "," << cfg.seed << "\n";
    return kExitPass;
  }
  Json j = {{"command", "search"},
            {"operator", built.description},
            {"objective", objective_name(parse_objective(cfg.objective))},
            {"seed", cfg.seed},
            {"budget", cfg.budget},
            {"evaluations", res.evaluations},
            {"origin", res.origin},
            {"best", matrix_to_json(res.best)},
            {"report", report_to_json(res.report)},
            {"environment", environment()}};
  *o.stream << j.dump(2) << "\n";
  return kExitPass;
}

// The fixed battery behind `report`: tightness witnesses and representative
// instances from every module.
std::vector<InequalityReport> battery(const RunConfig& base) {
  struct Item {
    std::string name;
    std::function<void(RunConfig&)> setup;
  };
  auto opt = [](const char* s) { return std::optional<std::string>(s); };
  const std::vector<Item> items = {
      {"primary-up", [&](RunConfig& c) { c.group = opt("4"); c.vector = opt("delta:0"); }},
      {"donoho-stark", [&](RunConfig& c) { c.group = opt("6"); c.vector = opt("subgroup:0,3"); }},
      {"donoho-stark", [&](RunConfig& c) { c.group = opt("2,2,3"); c.vector = opt("subgroup:0,3"); }},
      {"approx-support-l1", [&](RunConfig& c) { c.group = opt("8"); c.vector = opt("indicator:0,4"); c.eps = c.eta = opt("0.25"); }},
      {"approx-support-l2", [&](RunConfig& c) { c.group = opt("16"); c.vector = opt("random:3"); c.eps = c.eta = opt("0.1"); }},
      {"supp1-vs-supp2", [&](RunConfig& c) { c.n = opt("10000"); c.vector = opt("harmonic"); c.eps = opt("0.3"); }},
      {"norm-up", [&](RunConfig& c) { c.group = opt("12"); c.vector = opt("subgroup:0,4,8"); c.q = opt("2"); }},
      {"hausdorff-young", [&](RunConfig& c) { c.group = opt("9"); c.vector = opt("random:5"); c.p = opt("1.5"); }},
      {"norm-up-midrange", [&](RunConfig& c) { c.group = opt("12"); c.vector = opt("subgroup:0,4,8"); c.p = opt("1.5"); c.q = opt("3"); }},
      {"counterexample", [&](RunConfig& c) { c.n = opt("4"); c.p = opt("2"); c.q = opt("inf"); }},
      {"counterexample", [&](RunConfig& c) { c.n = opt("64"); c.p = opt("2"); c.q = opt("inf"); }},
      {"meshulam", [&](RunConfig& c) { c.group = opt("S3"); c.vector = opt("subgroup:0,3,4"); }},
      {"kuperberg", [&](RunConfig& c) { c.group = opt("Q8"); c.vector = opt("delta:2"); }},
      {"factor-4", [&](RunConfig& c) { c.group = opt("D4"); c.vector = opt("random:7"); }},
      {"min-support-up", [&](RunConfig& c) { c.group = opt("S3"); c.vector = opt("subgroup:0,3,4"); }},
      {"n2-hadamard", [&](RunConfig& c) { c.group = opt("D4"); c.trials = 100; }},
      {"primary-up-grid", [&](RunConfig& c) { c.function = opt("gaussian"); }},
      {"norm-up-grid", [&](RunConfig& c) { c.function = opt("gaussian"); c.q = opt("2"); }},
      {"support-measure", [&](RunConfig& c) { c.function = opt("gaussian"); }},
      {"support-measure", [&](RunConfig& c) { c.function = opt("gaussian"); c.lct = opt("1,2,0,1"); }},
      {"heisenberg-q", [&](RunConfig& c) { c.function = opt("gaussian"); c.q = opt("2"); }},
      {"heisenberg-q", [&](RunConfig& c) { c.function = opt("gaussian"); c.q = opt("inf"); }},
      {"heisenberg-q", [&](RunConfig& c) { c.function = opt("gaussian"); c.q = opt("2"); c.lct = opt("1,2,0,1"); }},
      {"variance-bound", [&](RunConfig& c) { c.function = opt("gaussian"); c.q = opt("2"); }},
      {"variance-bound", [&](RunConfig& c) { c.function = opt("lorentzian"); c.q = opt("inf"); }},
      {"moment-up", [&](RunConfig& c) { c.function = opt("gaussian"); c.r = opt("3"); c.s = opt("2"); c.q = opt("2"); }},
      {"moment-up-corollary", [&](RunConfig& c) { c.function = opt("gaussian"); c.r = opt("3"); c.q = opt("4"); }},
      {"family-fab", [&](RunConfig& c) { c.a = opt("2"); c.b = opt("1"); }},
      {"family-gc", [&](RunConfig& c) { c.c = opt("1"); }},
      {"family-gc", [&](RunConfig& c) { c.c = opt("10"); }},
      {"f-coverage", [&](RunConfig&) {}},
  };
  std::vector<InequalityReport> out;
  for (const auto& item : items) {
    RunConfig c;
    c.command = Command::Check;
    c.tol = base.tol;
    c.seed = base.seed;
    item.setup(c);
    const auto& info = lookup(item.name);
    const Context ctx = prepare(c, info.kind);
    out.push_back(run_point(item.name, ctx, scalar_point(info.kind == Kind::Coverage ? RunConfig{} : c)));
  }
  return out;
}

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto reports = battery(cfg);
  Output o(cfg, out);
  if (format_for(cfg, Format::Json) == Format::Csv) {
    write_report_csv(*o.stream, reports, cfg.seed);
  } else {
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass ? 1 : 0;
    Json j = {{"command", "report"}, {"seed", cfg.seed}, {"tol", cfg.tol},
              {"passed", passed}, {"total", reports.size()}, {"reports", reports_json(reports)},
              {"warnings", warnings_json(reports)}, {"environment", environment()}};
    *o.stream << j.dump(2) << "\n";
  }
  return exit_for(reports, err);
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : check_table()) names.push_back(k);
  return names;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Construct:
        return cmd_construct(cfg, out);
      case Command::Certify:
        return cmd_certify(cfg, out);
      case Command::Check:
        return cmd_check(cfg, out, err);
      case Command::Sweep:
        return cmd_sweep(cfg, out, err);
      case Command::Search:
        return cmd_search(cfg, out);
      case Command::Report:
        return cmd_report(cfg, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const auto parsed = parse_args(argc, argv);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace khup::cli
