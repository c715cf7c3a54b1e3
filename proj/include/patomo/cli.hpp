#pragma once

#include <iosfwd>
#include <string>

namespace patomo::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Tolerances used by `validate`.
inline constexpr double kNormalizationTol = 1e-8;
inline constexpr double kSymmetryTol = 1e-9;
inline constexpr double kUncertaintyBound = 0.25 - 1e-6;
inline constexpr double kOracleTol = 1e-8;
inline constexpr double kTimeShiftTol = 1e-10;
inline constexpr double kThetaIndependenceTol = 1e-10;

/// Runs the tool with argv-style arguments (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace patomo::cli
