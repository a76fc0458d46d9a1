#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tileforge/ratmath.hpp"

namespace tileforge::cli {

/// Exit codes: 0 computed, 1 usage, 2 out of scope, 3 budget, 4 internal error.
enum ExitCode : int { ok = 0, usage = 1, scope = 2, budget = 3, internal = 4 };

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "a,b;c,d": rows separated by ';', entries by ','. Entries are
/// arbitrary-precision integers. Throws ParseError naming the offending token.
IntMatrix parse_matrix(const std::string& spec);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tileforge::cli
