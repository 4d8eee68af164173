// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crouzeix::cli {

/// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;   // some ratio exceeded 2 after re-checks
inline constexpr int kExitError = 2;  // usage, input or numerical error

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crouzeix::cli
