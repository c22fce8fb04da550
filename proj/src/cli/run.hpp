#pragma once

#include "config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace khup::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitConfig = 2;

/// Names accepted by `check` and `sweep`, aliases included.
std::vector<std::string> check_names();

/// Executes the command, writing the report to cfg.out (or `out`).
/// Diagnostics go to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace khup::cli
