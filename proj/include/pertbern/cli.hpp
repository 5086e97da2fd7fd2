#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pertbern/basis.hpp"
#include "pertbern/operators.hpp"

namespace pertbern {

enum class Command { Eval, Moments, Verify, Voronovskaya, Sweep };
enum class Format { Csv, Json };

struct RunConfig {
  Command command = Command::Eval;
  OperatorId op;
  std::string scheme_spec;  // empty when not given
  std::vector<std::string> functions;
  std::vector<int> n_list;
  std::vector<double> x;
  int grid_points = 0;  // 0: command default
  std::string theorem = "all";
  std::string out;  // directory; empty writes to stdout
  Format format = Format::Csv;
  int quad_order = 0;  // Gauss points per cell; 0 picks automatically
};

/// "classic" (a1 = -1), "a1=<number>" or "a1=1/n".
CoefficientScheme parse_scheme(const std::string& spec);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

/// Parses argv and runs one subcommand. Results go to `out` (or to files
/// under --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pertbern
