#pragma once

// Finite groups given by Cayley tables, together with shipped unitary
// irreducible representations.

#include "khup/numerics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace khup {

/// Elements are 0..n-1; cayley[a][b] is the index of a*b. Construction
/// validates the Latin-square property, identity, inverses and
/// associativity (all triples for n <= 64, otherwise Light's test against a
/// generating set).
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<std::size_t>> cayley, std::vector<std::string> labels = {});

  std::size_t order() const { return cayley_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return cayley_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const { return identity_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& cayley() const { return cayley_; }
  bool is_abelian() const;
  /// Greedy generating set (each element added only if it enlarges the
  /// generated subgroup).
  std::vector<std::size_t> generators() const;
  bool is_subgroup(const std::vector<std::size_t>& elements) const;

 private:
  std::vector<std::vector<std::size_t>> cayley_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::vector<std::string> labels_;
};

struct Irrep {
  int dim = 1;
  std::vector<ComplexMatrix> matrices;  // one d x d unitary per element
};

/// A full set of unitary irreps. Validation checks the homomorphism
/// property on every pair, unitarity to 1e-10, sum of d_i^2 = n and the
/// matrix-entry orthogonality relations.
class IrrepCatalog {
 public:
  IrrepCatalog(const FiniteGroup& g, std::vector<Irrep> reps);

  const std::vector<Irrep>& reps() const { return reps_; }
  std::size_t size() const { return reps_.size(); }

 private:
  std::vector<Irrep> reps_;
};

struct GroupWithIrreps {
  std::string name;
  FiniteGroup group;
  std::optional<IrrepCatalog> irreps;
};

GroupWithIrreps cyclic_group(int n);
/// Z_{n1} x ... x Z_{nr}, mixed-radix indexing as FiniteAbelianGroup.
GroupWithIrreps abelian_product(const std::vector<int>& factors);
/// Dihedral group of order 2n; index k + n*e stands for r^k s^e.
GroupWithIrreps dihedral_group(int n);
/// Q8 ordered 1, -1, i, -i, j, -j, k, -k.
GroupWithIrreps quaternion_group();
/// S3 as permutations of {0,1,2} in lexicographic order, product = composition.
GroupWithIrreps symmetric_group_3();

/// Parses "Z6", "cyclic:6", "product:2,3", "D4", "dihedral:4", "Q8", "S3".
GroupWithIrreps builtin_group(const std::string& spec);
std::vector<std::string> builtin_group_names();

}  // namespace khup
