#pragma once

// Text specs on the command line -> library objects.

#include "config.hpp"

#include "khup/continuous.hpp"
#include "khup/group.hpp"
#include "khup/khadamard.hpp"

#include <optional>
#include <string>
#include <vector>

namespace khup::cli {

/// "start:stop:step" (inclusive, float-safe), "x,y,z" or a single value.
/// "inf" is accepted anywhere and maps to +infinity.
std::vector<double> parse_grid(const std::string& text, const char* flag);
double parse_scalar(const std::string& text, const char* flag);
std::vector<int> parse_int_list(const std::string& text, const char* flag);
std::vector<std::size_t> parse_index_list(const std::string& text, const char* flag);
NormIndex norm_index(double p);

struct BuiltMatrix {
  ComplexMatrix a;
  std::string description;
  std::optional<FiniteAbelianGroup> group;  // set for Fourier constructions
};

std::vector<std::string> construction_names();
/// From --matrix, --construct or (Fourier of) --group factors.
BuiltMatrix build_matrix(const RunConfig& cfg);

/// True for "2,2,3"-style factor lists.
bool is_factor_list(const std::string& spec);
GroupWithIrreps resolve_group(const std::string& spec);

/// Vector / group-function spec of length n. subgroup: specs are validated
/// against whichever group is supplied.
ComplexVector parse_vector(const std::string& spec, std::size_t n,
                           const FiniteAbelianGroup* abelian = nullptr,
                           const FiniteGroup* group = nullptr);

/// Grid-function spec; fab/gc use their own family grids unless --samples
/// was given. Analytic specs are sampled adaptively from (samples, L).
GridFunction build_grid_function(const std::string& spec, const RunConfig& cfg, double a, double b,
                                 double c);

}  // namespace khup::cli
