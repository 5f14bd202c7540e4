#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cayley::cli {

/// Executes exactly one subcommand.  Results go to `out` (or the --out
/// file); diagnostics and timing go to `err`.  Exit codes: 0 success,
/// 1 usage or input error, 2 capacity error, 3 a check subcommand detected a
/// violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
