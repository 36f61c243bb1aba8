#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "decostab/json_io.hpp"

namespace decostab::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kValidation = 2, kBudget = 3, kFailedCheck = 4 };

struct Options {
  std::uint64_t budget = kDefaultSubsetBudget;
  bool canonical = false;
  bool assert_pass = false;
};

/// Evaluates one command against an input document. profile commands name
/// their kind in `sub`. Throws Error / io::SchemaError on bad input.
io::Json execute(const std::string& command, const std::string& sub, const io::Json& doc,
                 const Options& options);

/// Full command line (without the program name). Prints the result document
/// to `out`, errors as a JSON line to `err`, and returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Commands whose result is a verdict, subject to --assert-pass.
bool is_verdict_command(const std::string& command);

}  // namespace decostab::cli
