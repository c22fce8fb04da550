#include "khup/group.hpp"

#include "khup/khadamard.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace khup {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> cayley,
                         std::vector<std::string> labels)
    : cayley_(std::move(cayley)), labels_(std::move(labels)) {
  const std::size_t n = cayley_.size();
  if (n == 0) throw std::invalid_argument("group: empty Cayley table");
  if (n > 4096) throw std::invalid_argument("group: order above 4096 is not supported");
  for (const auto& row : cayley_) {
    if (row.size() != n) throw std::invalid_argument("group: Cayley table is not square");
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = cayley_[a][b];
      if (c >= n || seen[c]) throw std::invalid_argument("group: row " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = cayley_[b][a];
      if (seen[c]) throw std::invalid_argument("group: column " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = cayley_[e][a] == a && cayley_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("group: no two-sided identity");

  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (cayley_[a][b] == identity_) {
        if (cayley_[b][a] != identity_) throw std::invalid_argument("group: one-sided inverse");
        inverse_[a] = b;
      }
    }
  }

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return cayley_[cayley_[a][b]][c] == cayley_[a][cayley_[b][c]];
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw std::invalid_argument("group: table is not associative");
  } else {
    // Light's test: checking the middle argument on generators suffices.
    for (std::size_t g : generators())
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, g, c)) throw std::invalid_argument("group: table is not associative");
  }

  if (labels_.empty()) {
    labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels_[i] = std::to_string(i);
  } else if (labels_.size() != n) {
    throw std::invalid_argument("group: label count does not match order");
  }
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (cayley_[a][b] != cayley_[b][a]) return false;
  return true;
}

std::vector<std::size_t> FiniteGroup::generators() const {
  const std::size_t n = order();
  std::vector<std::size_t> gens;
  std::vector<char> in(n, 0);
  in[identity_] = 1;
  std::size_t count = 1;
  for (std::size_t x = 0; x < n && count < n; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    // Closure of the current subgroup under right multiplication by gens.
    std::vector<std::size_t> frontier;
    for (std::size_t y = 0; y < n; ++y)
      if (in[y]) frontier.push_back(y);
    while (!frontier.empty()) {
      const std::size_t y = frontier.back();
      frontier.pop_back();
      for (std::size_t g : gens) {
        const std::size_t z = cayley_[y][g];
        if (!in[z]) {
          in[z] = 1;
          ++count;
          frontier.push_back(z);
        }
      }
    }
  }
  return gens;
}

bool FiniteGroup::is_subgroup(const std::vector<std::size_t>& elements) const {
  const std::set<std::size_t> s(elements.begin(), elements.end());
  if (!s.contains(identity_)) return false;
  for (std::size_t a : s) {
    if (a >= order()) return false;
    for (std::size_t b : s)
      if (!s.contains(cayley_[a][b])) return false;
  }
  return true;
}

IrrepCatalog::IrrepCatalog(const FiniteGroup& g, std::vector<Irrep> reps) : reps_(std::move(reps)) {
  const std::size_t n = g.order();
  std::size_t dim_sq = 0;
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    const auto& r = reps_[i];
    const std::string tag = "irrep " + std::to_string(i);
    if (r.dim < 1 || r.matrices.size() != n) throw std::invalid_argument(tag + ": wrong shape");
    dim_sq += static_cast<std::size_t>(r.dim * r.dim);
    const ComplexMatrix id = ComplexMatrix::Identity(r.dim, r.dim);
    for (const auto& m : r.matrices) {
      if (m.rows() != r.dim || m.cols() != r.dim) throw std::invalid_argument(tag + ": wrong matrix size");
      require_finite(m, "irrep matrix");
      if ((m.adjoint() * m - id).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument(tag + ": matrix not unitary");
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if ((r.matrices[a] * r.matrices[b] - r.matrices[g.mul(a, b)]).cwiseAbs().maxCoeff() > 1e-10)
          throw std::invalid_argument(tag + ": not a homomorphism at (" + std::to_string(a) + ", " +
                                      std::to_string(b) + ")");
  }
  if (dim_sq != n) {
    throw std::invalid_argument("irrep catalog: sum of squared dimensions " + std::to_string(dim_sq) +
                                " != group order " + std::to_string(n));
  }
  // Matrix entries, scaled by sqrt(d/n), must be orthonormal.
  ComplexMatrix c(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  Eigen::Index col = 0;
  for (const auto& r : reps_)
    for (int j = 0; j < r.dim; ++j)
      for (int k = 0; k < r.dim; ++k, ++col)
        for (std::size_t x = 0; x < n; ++x)
          c(static_cast<Eigen::Index>(x), col) =
              std::sqrt(static_cast<double>(r.dim) / static_cast<double>(n)) * r.matrices[x](j, k);
  const ComplexMatrix gram = c.adjoint() * c;
  if ((gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("irrep catalog: matrix entries violate orthogonality (reps not "
                                "irreducible or not pairwise inequivalent)");
  }
}

namespace {

ComplexMatrix scalar(Complex z) { return ComplexMatrix::Constant(1, 1, z); }

}  // namespace

GroupWithIrreps abelian_product(const std::vector<int>& factors) {
  const FiniteAbelianGroup ab(factors);
  const std::size_t n = ab.order();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = ab.add(a, b);
    const auto c = ab.coordinates(a);
    if (c.size() == 1) {
      labels[a] = std::to_string(c[0]);
    } else {
      std::string s = "(";
      for (std::size_t j = 0; j < c.size(); ++j) s += (j ? "," : "") + std::to_string(c[j]);
      labels[a] = s + ")";
    }
  }
  FiniteGroup g(std::move(table), std::move(labels));

  // Character chi(x) = prod_j w_{n_j}^{chi_j x_j}.
  std::vector<Irrep> reps(n);
  for (std::size_t chi = 0; chi < n; ++chi) {
    const auto cc = ab.coordinates(chi);
    reps[chi].matrices.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      const auto cx = ab.coordinates(x);
      double turns = 0.0;
      for (std::size_t j = 0; j < cc.size(); ++j) {
        turns += static_cast<double>(cc[j] * cx[j] % factors[j]) / factors[j];
      }
      reps[chi].matrices[x] = scalar(std::polar(1.0, 2.0 * std::numbers::pi * turns));
    }
  }
  IrrepCatalog cat(g, std::move(reps));
  std::string name = "Z";
  for (std::size_t j = 0; j < factors.size(); ++j) name += (j ? "xZ" : "") + std::to_string(factors[j]);
  return {name, std::move(g), std::move(cat)};
}

GroupWithIrreps cyclic_group(int n) { return abelian_product({n}); }

GroupWithIrreps dihedral_group(int n) {
  if (n < 3) throw std::invalid_argument("dihedral_group: need n >= 3");
  const std::size_t order = 2 * static_cast<std::size_t>(n);
  auto idx = [n](int k, int e) {
    return static_cast<std::size_t>(((k % n) + n) % n + n * e);
  };
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  std::vector<std::string> labels(order);
  for (int a = 0; a < n; ++a) {
    for (int e = 0; e < 2; ++e) {
      labels[idx(a, e)] = (a == 0 && e == 0) ? "e"
                          : (a == 0 ? "" : "r^" + std::to_string(a)) + (e ? "s" : "");
      for (int b = 0; b < n; ++b)
        for (int f = 0; f < 2; ++f)
          table[idx(a, e)][idx(b, f)] = idx(a + (e ? -b : b), (e + f) % 2);
    }
  }
  FiniteGroup g(std::move(table), std::move(labels));

  std::vector<Irrep> reps;
  auto one_dim = [&](int sign_r, int sign_s) {
    Irrep r;
    r.matrices.resize(order);
    for (int k = 0; k < n; ++k)
      for (int e = 0; e < 2; ++e)
        r.matrices[idx(k, e)] = scalar((k % 2 && sign_r < 0 ? -1.0 : 1.0) * (e && sign_s < 0 ? -1.0 : 1.0));
    reps.push_back(std::move(r));
  };
  one_dim(1, 1);
  one_dim(1, -1);
  if (n % 2 == 0) {
    one_dim(-1, 1);
    one_dim(-1, -1);
  }
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, -1;
  for (int j = 1; j <= (n - 1) / 2; ++j) {
    Irrep r;
    r.dim = 2;
    r.matrices.resize(order);
    for (int k = 0; k < n; ++k) {
      const double t = 2.0 * std::numbers::pi * j * k / n;
      ComplexMatrix rot(2, 2);
      rot << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
      r.matrices[idx(k, 0)] = rot;
      r.matrices[idx(k, 1)] = rot * s;
    }
    reps.push_back(std::move(r));
  }
  IrrepCatalog cat(g, std::move(reps));
  return {"D" + std::to_string(n), std::move(g), std::move(cat)};
}

GroupWithIrreps quaternion_group() {
  // Element 2u + s is (-1)^s times unit u, u in {1, i, j, k}.
  // unit_mul[u][v] = {sign, unit} of u*v.
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> unit_mul = {{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto& m = unit_mul[a / 2][b / 2];
      table[a][b] = static_cast<std::size_t>(2 * m[1] + (a % 2 + b % 2 + m[0]) % 2);
    }
  FiniteGroup g(std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});

  std::vector<Irrep> reps;
  for (int sa : {1, -1})
    for (int sb : {1, -1}) {
      Irrep r;
      const double unit_val[4] = {1.0, double(sa), double(sb), double(sa * sb)};
      for (int x = 0; x < 8; ++x) r.matrices.push_back(scalar(unit_val[x / 2]));
      reps.push_back(std::move(r));
    }
  const Complex i(0.0, 1.0);
  ComplexMatrix units[4] = {ComplexMatrix::Identity(2, 2), ComplexMatrix(2, 2), ComplexMatrix(2, 2),
                            ComplexMatrix(2, 2)};
  units[1] << i, 0, 0, -i;
  units[2] << 0, 1, -1, 0;
  units[3] << 0, i, i, 0;
  Irrep two;
  two.dim = 2;
  for (int x = 0; x < 8; ++x) two.matrices.push_back((x % 2 ? -1.0 : 1.0) * units[x / 2]);
  reps.push_back(std::move(two));
  IrrepCatalog cat(g, std::move(reps));
  return {"Q8", std::move(g), std::move(cat)};
}

GroupWithIrreps symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto find = [&](const std::array<int, 3>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < 6; ++a) {
    labels.push_back("[" + std::to_string(perms[a][0]) + std::to_string(perms[a][1]) +
                     std::to_string(perms[a][2]) + "]");
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c;
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = find(c);
    }
  }
  FiniteGroup g(std::move(table), std::move(labels));

  Irrep triv, sign, std2;
  std2.dim = 2;
  Eigen::MatrixXd basis(3, 2);
  basis << 1 / std::sqrt(2.0), 1 / std::sqrt(6.0), -1 / std::sqrt(2.0), 1 / std::sqrt(6.0), 0,
      -2 / std::sqrt(6.0);
  for (const auto& q : perms) {
    Eigen::Matrix3d pm = Eigen::Matrix3d::Zero();
    for (int x = 0; x < 3; ++x) pm(q[x], x) = 1.0;
    triv.matrices.push_back(scalar(1.0));
    sign.matrices.push_back(scalar(pm.determinant()));
    std2.matrices.push_back((basis.transpose() * pm * basis).cast<Complex>());
  }
  IrrepCatalog cat(g, {std::move(triv), std::move(sign), std::move(std2)});
  return {"S3", std::move(g), std::move(cat)};
}

std::vector<std::string> builtin_group_names() {
  return {"Z<n>", "cyclic:<n>", "product:<n1,n2,...>", "D<n>", "dihedral:<n>", "Q8", "S3"};
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

GroupWithIrreps builtin_group(const std::string& spec) {
  try {
    if (spec == "Q8") return quaternion_group();
    if (spec == "S3") return symmetric_group_3();
    if (spec.starts_with("cyclic:")) return cyclic_group(parse_int_list(spec.substr(7)).at(0));
    if (spec.starts_with("product:")) return abelian_product(parse_int_list(spec.substr(8)));
    if (spec.starts_with("dihedral:")) return dihedral_group(parse_int_list(spec.substr(9)).at(0));
    if (spec.size() > 1 && spec[0] == 'Z') return abelian_product(parse_int_list(spec.substr(1)));
    if (spec.size() > 1 && spec[0] == 'D') return dihedral_group(parse_int_list(spec.substr(1)).at(0));
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("group '" + spec + "': " + e.what());
  }
  std::string names;
  for (const auto& s : builtin_group_names()) names += (names.empty() ? "" : ", ") + s;
  throw std::invalid_argument("unknown group '" + spec + "'; valid: " + names);
}

}  // namespace khup
