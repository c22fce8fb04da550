#include "specs.hpp"

#include "json_io.hpp"
#include "khup/finite_up.hpp"
#include "khup/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace khup::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double to_double(const std::string& tok, const char* flag) {
  if (tok == "inf" || tok == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tok.size() || std::isnan(v)) {
    throw std::invalid_argument(std::string(flag) + ": '" + tok + "' is not a number");
  }
  return v;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text, const char* flag) {
  const auto parts = split(text, ':');
  if (parts.size() == 3) {
    const double lo = to_double(parts[0], flag), hi = to_double(parts[1], flag), step = to_double(parts[2], flag);
    if (!(step > 0) || !std::isfinite(lo) || !std::isfinite(hi)) {
      throw std::invalid_argument(std::string(flag) + ": range needs finite ends and a positive step");
    }
    std::vector<double> out;
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= count; ++i) out.push_back(lo + static_cast<double>(i) * step);
    if (out.empty()) throw std::invalid_argument(std::string(flag) + ": empty grid");
    return out;
  }
  if (parts.size() != 1) throw std::invalid_argument(std::string(flag) + ": use start:stop:step or a list");
  std::vector<double> out;
  for (const auto& tok : split(text, ',')) out.push_back(to_double(tok, flag));
  if (out.empty()) throw std::invalid_argument(std::string(flag) + ": empty grid");
  return out;
}

double parse_scalar(const std::string& text, const char* flag) {
  const auto g = parse_grid(text, flag);
  if (g.size() != 1) throw std::invalid_argument(std::string(flag) + ": expected one value, got a grid");
  return g[0];
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  for (const auto& tok : split(text, ',')) {
    const double v = to_double(tok, flag);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
      throw std::invalid_argument(std::string(flag) + ": '" + tok + "' is not an integer");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text, const char* flag) {
  std::vector<std::size_t> out;
  for (int v : parse_int_list(text, flag)) {
    if (v < 0) throw std::invalid_argument(std::string(flag) + ": negative index");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

NormIndex norm_index(double p) { return std::isinf(p) ? NormIndex::infinity() : NormIndex(p); }

std::vector<std::string> construction_names() {
  return {"fourier", "sylvester", "paley", "code", "pg2", "random"};
}

bool is_factor_list(const std::string& spec) {
  return !spec.empty() && spec.find_first_not_of("0123456789,") == std::string::npos;
}

BuiltMatrix build_matrix(const RunConfig& cfg) {
  if (cfg.matrix_file) return {matrix_from_json(load_json_file(*cfg.matrix_file)), "file:" + *cfg.matrix_file, std::nullopt};
  std::string name = cfg.construct.value_or("");
  if (name.empty()) {
    if (cfg.group && is_factor_list(*cfg.group)) name = "fourier";
    else throw std::invalid_argument("no operator: give --construct, --matrix, or --group with cyclic factors");
  }
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw std::invalid_argument("construct " + name + " needs " + flag);
    return *v;
  };
  // For construct/certify/search the field size may also come from --q.
  std::optional<int> prime = cfg.prime;
  if (!prime && cfg.q && (cfg.command == Command::Construct || cfg.command == Command::Certify ||
                          cfg.command == Command::Search)) {
    prime = parse_int_list(*cfg.q, "--q").at(0);
  }
  if (name == "fourier") {
    std::vector<int> factors;
    if (cfg.group) {
      if (!is_factor_list(*cfg.group)) throw std::invalid_argument("fourier needs --group as cyclic factors, e.g. 2,2,3");
      factors = parse_int_list(*cfg.group, "--group");
    } else if (cfg.n) {
      factors = parse_int_list(*cfg.n, "--n");
    } else {
      throw std::invalid_argument("construct fourier needs --group factors or --n");
    }
    FiniteAbelianGroup g(factors);
    return {fourier_matrix(g), "fourier:" + *(cfg.group ? cfg.group : cfg.n), g};
  }
  if (name == "sylvester") {
    const int m = need(cfg.m, "--m");
    return {sylvester_hadamard(m), "sylvester:" + std::to_string(m), std::nullopt};
  }
  if (name == "paley") {
    const int q = need(prime, "--prime (or --q)");
    return {paley_hadamard(q), "paley:" + std::to_string(q), std::nullopt};
  }
  if (name == "pg2") {
    const int q = need(prime, "--prime (or --q)");
    return {pg2_incidence(q), "pg2:" + std::to_string(q), std::nullopt};
  }
  if (name == "code") {
    const int n = need(cfg.size, "--size");
    return {hadamard_code_matrix(n), "code:" + std::to_string(n), std::nullopt};
  }
  if (name == "random") {
    const int n = need(cfg.size, "--size");
    return {scaled_random_orthogonal(n, cfg.seed), "random:" + std::to_string(n), std::nullopt};
  }
  throw std::invalid_argument("unknown construction '" + name + "'; valid: " + join(construction_names()));
}

GroupWithIrreps resolve_group(const std::string& spec) {
  if (spec.starts_with("file:")) return group_from_json(load_json_file(spec.substr(5)));
  if (is_factor_list(spec)) return abelian_product(parse_int_list(spec, "--group"));
  return builtin_group(spec);
}

ComplexVector parse_vector(const std::string& spec, std::size_t n, const FiniteAbelianGroup* abelian,
                           const FiniteGroup* group) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  ComplexVector v;
  if (kind == "subgroup") {
    const auto idx = parse_index_list(arg, "--vector subgroup");
    bool closed = false;
    if (abelian) closed = abelian->is_subgroup(idx);
    else if (group) closed = group->is_subgroup(idx);
    else throw std::invalid_argument("--vector subgroup: needs a group (--group)");
    if (!closed) throw std::invalid_argument("--vector subgroup:" + arg + " is not closed under the group law");
    v = indicator(n, idx);
  } else if (kind == "indicator") {
    v = indicator(n, parse_index_list(arg, "--vector indicator"));
  } else if (kind == "delta") {
    v = delta_vector(n, parse_index_list(arg, "--vector delta").at(0));
  } else if (kind == "ones") {
    v = ComplexVector::Ones(static_cast<Eigen::Index>(n));
  } else if (kind == "harmonic") {
    v = harmonic_vector(n);
  } else if (kind == "random") {
    std::mt19937_64 rng(arg.empty() ? 1 : static_cast<std::uint64_t>(parse_int_list(arg, "--vector random").at(0)));
    v = random_gaussian_vector(n, rng);
  } else if (kind == "values") {
    const auto vals = parse_grid(arg, "--vector values");
    v.resize(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Eigen::Index>(i)] = vals[i];
  } else if (kind == "file") {
    v = vector_from_json(load_json_file(arg));
  } else {
    throw std::invalid_argument("unknown vector spec '" + spec +
                                "'; valid: subgroup:, indicator:, delta:, ones, harmonic, random:, values:, file:");
  }
  if (static_cast<std::size_t>(v.size()) != n) {
    throw std::invalid_argument("--vector has length " + std::to_string(v.size()) + ", operator needs " + std::to_string(n));
  }
  require_finite(v, "--vector");
  return v;
}

GridFunction build_grid_function(const std::string& spec, const RunConfig& cfg, double a, double b,
                                 double c) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const std::size_t fixed = cfg.samples_set ? cfg.samples : 0;
  if (kind == "fab") {
    if (std::isnan(a) || std::isnan(b)) throw std::invalid_argument("function fab needs --a and --b");
    return family_fab(a, b, fixed).f;
  }
  if (kind == "gc") {
    if (std::isnan(c)) throw std::invalid_argument("function gc needs --c");
    return family_gc(c, fixed).f;
  }
  if (kind == "file") {
    GridFunction f = grid_from_json(load_json_file(arg));
    if (!f.symmetric()) throw std::invalid_argument("grid function file: grid must be symmetric, x0 = -(n-1)dx/2");
    return f;
  }
  std::function<Complex(double)> fn;
  if (kind == "gaussian") {
    fn = gaussian;
  } else if (kind == "shifted-gaussian") {
    const double s = parse_scalar(arg, "--function shifted-gaussian");
    fn = [s](double x) { return gaussian(x - s); };
  } else if (kind == "lorentzian") {
    fn = [](double x) { return Complex(1.0 / (1.0 + x * x), 0.0); };
  } else {
    throw std::invalid_argument("unknown function spec '" + spec +
                                "'; valid: gaussian, shifted-gaussian:a, lorentzian, fab, gc, file:path");
  }
  if (kind == "lorentzian") return sample(fn, cfg.samples, cfg.halfwidth);  // heavy tail: never converges
  return sample_adaptive(fn, cfg.samples, cfg.halfwidth).f;
}

}  // namespace khup::cli
