#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gegenmetric::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,        // internal error or failed verification
  kPrecondition = 2,   // bad input: unparseable value, pole, invalid option
  kIndeterminate = 3,  // numerical verdict inside the uncertainty band
};

// Everything a subcommand needs, as parsed from the command line. Rationals
// and expressions stay as text until the command validates them, so
// diagnostics can name the offending field.
struct RunConfig {
  std::string subcommand;
  int N = 0;
  std::string a = "1";
  std::optional<std::string> a_numeric;  // --a given to hamiltonian/metric/basis
  std::string convention = "displayed";
  std::optional<std::string> first_row;
  std::vector<std::string> assignments;  // name=value for metric parameters
  std::optional<std::string> theta_file;
  std::string line = "default";
  std::optional<std::string> base;
  std::optional<std::string> direction;
  std::string range = "-1:1";
  int grid = 201;
  std::string refine_tol = "1e-12";
  int digits = 50;
  bool log_scale = false;
  std::string ordering = "tracked";
  std::string format = "json";
  std::optional<std::string> output;
};

// Default precision: GEGENMETRIC_DIGITS if set and valid, else 50.
int default_digits();

// Parses argv into a RunConfig. On --help or a parse error, writes the
// message and returns the exit code to use instead of a config.
struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kSuccess;
};
ParseResult parse_command_line(int argc, const char* const* argv, std::ostream& out,
                               std::ostream& err);

// Executes the subcommand, writing the artifact to config.output or `out`.
// Errors become one-line diagnostics on `err` and the matching exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gegenmetric::cli
