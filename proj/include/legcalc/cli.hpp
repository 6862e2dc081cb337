#pragma once

/**
 * @file cli.hpp
 * @brief The command-line entry point, exposed as a library function so
 *        tests can drive it in-process.
 *
 * Subcommands are noun-verb: `farey path`, `range check`, `torus reps`,
 * `torus realize`, `torus isotopic`, `torus perms`, `torus transverse`,
 * `cable regime`, `cable reps`, `cable realize`, `cable perms`,
 * `cable transverse`, `front cable`, `front torus`, `front invariants`,
 * plus `--json` for machine output and `--explain` for a rationale naming
 * the governing result.
 *
 * Exit codes: 0 decided (yes), 1 negative decision on a yes/no query,
 * 2 usage or validation error, 3 the decision is out of the tool's scope.
 */

#include <ostream>
#include <string>
#include <vector>

namespace legcalc::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnknown = 3;

/// Runs one invocation.  `args` excludes the program name.  All normal
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace legcalc::cli
