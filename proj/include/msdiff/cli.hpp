#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msdiff {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitSolver = 2;

/// Subcommands: run, converge, compare, scenarios. `args` excludes the
/// program name. Data goes to files or `out`; diagnostics go to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace msdiff
