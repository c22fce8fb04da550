#include "json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace khup::cli {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

namespace {

Complex complex_from_json(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2) return {e[0].get<double>(), e[1].get<double>()};
  throw std::invalid_argument("complex entry must be [re, im] or a number");
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  try {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const auto& data = j.at("data");
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix: rows and cols must be positive");
    if (static_cast<Eigen::Index>(data.size()) != rows * cols) {
      throw std::invalid_argument("matrix: data has " + std::to_string(data.size()) + " entries, expected " +
                                  std::to_string(rows * cols));
    }
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = complex_from_json(data[static_cast<std::size_t>(i * cols + c)]);
    require_finite(m, "matrix");
    return m;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("matrix JSON: ") + e.what());
  }
}

ComplexVector vector_from_json(const Json& j) {
  const ComplexMatrix m = matrix_from_json(j);
  if (m.cols() != 1) throw std::invalid_argument("vector JSON must have cols = 1");
  return m.col(0);
}

Json grid_to_json(const GridFunction& f) {
  Json s = Json::array();
  for (const auto& z : f.samples) s.push_back({z.real(), z.imag()});
  return {{"x0", f.x0}, {"dx", f.dx}, {"samples", std::move(s)}};
}

GridFunction grid_from_json(const Json& j) {
  try {
    GridFunction f;
    f.x0 = j.at("x0").get<double>();
    f.dx = j.at("dx").get<double>();
    if (!(f.dx > 0)) throw std::invalid_argument("grid function: dx must be positive");
    const auto& s = j.at("samples");
    if (s.size() < 2) throw std::invalid_argument("grid function: need at least 2 samples");
    f.samples.resize(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) f.samples[static_cast<Eigen::Index>(i)] = complex_from_json(s[i]);
    require_finite(f.samples, "grid function");
    return f;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("grid function JSON: ") + e.what());
  }
}

GroupWithIrreps group_from_json(const Json& j) {
  try {
    const auto n = j.at("order").get<std::size_t>();
    auto cayley = j.at("cayley").get<std::vector<std::vector<std::size_t>>>();
    if (cayley.size() != n) throw std::invalid_argument("group JSON: cayley table size != order");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    FiniteGroup g(std::move(cayley), std::move(labels));
    std::optional<IrrepCatalog> cat;
    if (j.contains("irreps")) {
      const auto& ir = j.at("irreps");
      const auto dims = ir.at("dims").get<std::vector<int>>();
      const auto& mats = ir.at("matrices");
      if (mats.size() != dims.size()) throw std::invalid_argument("group JSON: irreps dims/matrices mismatch");
      std::vector<Irrep> reps;
      for (std::size_t i = 0; i < dims.size(); ++i) {
        Irrep r;
        r.dim = dims[i];
        for (const auto& m : mats[i]) r.matrices.push_back(matrix_from_json(m));
        reps.push_back(std::move(r));
      }
      cat.emplace(g, std::move(reps));
    }
    return {"file", std::move(g), std::move(cat)};
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("group JSON: ") + e.what());
  }
}

Json certificate_to_json(const KHadamardCertificate& c) {
  return {{"k", number(c.k)},
          {"entry_bound", number(c.entry_bound)},
          {"unitary_defect", number(c.unitary_defect)},
          {"gram_inverse_norm", number(c.gram_inverse_norm)},
          {"condition_estimate", number(c.condition_estimate)},
          {"is_unitary_scaled", c.is_unitary_scaled},
          {"singular", c.singular},
          {"entry_bound_ok", c.entry_bound_ok},
          {"certified", c.certified()},
          {"tol", c.tol}};
}

Json report_to_json(const InequalityReport& r) {
  Json ctx = Json::object();
  for (const auto& [k, v] : r.context) ctx[k] = number(v);
  Json j = {{"theorem_id", r.theorem_id},
            {"lhs", number(r.lhs)},
            {"rhs", number(r.rhs)},
            {"ratio", number(r.ratio)},
            {"pass", r.pass},
            {"relation", relation_name(r.relation)},
            {"bound", number(r.bound)},
            {"tol", r.tol},
            {"context", std::move(ctx)}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace khup::cli
