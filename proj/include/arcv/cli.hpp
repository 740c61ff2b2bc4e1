#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arcv::cli {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInvalidInput = 2,
  kInconclusive = 3,
};

/// Runs one subcommand (character, supernomial, jet, fiber, fusion,
/// identities, accept). The report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Splits "1,-2,3/4" at commas, trimming blanks.
std::vector<std::string> split_list(const std::string& text);

}  // namespace arcv::cli
