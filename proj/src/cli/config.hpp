#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace khup::cli {

enum class Command { Construct, Certify, Check, Sweep, Search, Report };
enum class Format { Json, Csv };

/// Parameters stay as text until dispatch: the same flag can be a scalar
/// for `check` and a grid ("start:stop:step" or "a,b,c") for `sweep`.
struct RunConfig {
  Command command = Command::Report;
  std::string name;  // check / sweep name

  std::optional<std::string> construct;  // fourier, sylvester, paley, code, pg2, random
  std::optional<std::string> group;      // "2,2,3", builtin name, or file:path
  std::optional<std::string> matrix_file;
  std::optional<int> m;                  // sylvester exponent
  std::optional<int> prime;              // paley / pg2 parameter
  std::optional<int> size;               // code / random size

  std::optional<std::string> vector;     // vector or group-function spec
  std::optional<std::string> function;   // grid function spec
  std::optional<std::string> transform;  // ft or lct:a,b,c,d
  std::optional<std::string> lct;        // a,b,c,d

  std::optional<std::string> n, p, q, eps, eta, r, s, a, b, c;
  std::size_t samples = 4096;
  double halfwidth = 8.0;
  bool samples_set = false;
  double threshold = 1e-6;
  std::size_t trials = 0;
  long budget = 2000;
  std::string objective = "support_product";

  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::optional<Format> format;
  std::optional<std::string> out;
};

struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = 0;  // meaningful when config is empty (help or parse error)
};

ParseOutcome parse_args(int argc, const char* const* argv);

}  // namespace khup::cli
