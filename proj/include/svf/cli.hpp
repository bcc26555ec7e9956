#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace svf {

/// Runs one subcommand. `args` excludes the program name. JSON goes to
/// `out` (or the --out file); usage text goes to `err`.
/// Exit codes: 0 found/true, 1 NO/false, 2 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace svf
