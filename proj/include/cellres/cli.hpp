#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cellres {

/// Exit codes: 0 resolution/success, 1 non-resolution, 2 theorem-vs-oracle
/// disagreement, 64 usage or parse error.
inline constexpr int kExitResolution = 0;
inline constexpr int kExitNonResolution = 1;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitUsage = 64;

/// Runs one CLI invocation (args exclude the program name).  Output is
/// byte-deterministic for fixed arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cellres
