#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "chsh/engine.hpp"
#include "chsh/error.hpp"

namespace chsh::cli {

enum ExitCode : int { kSuccess = 0, kConfigError = 2, kValidationFailure = 3 };

/// Environment variable naming the directory that relative --out paths resolve against.
inline constexpr const char* kOutputDirEnv = "CHSH_OUTPUT_DIR";

/// Malformed or out-of-range command-line configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Parses "0.3", "-pi/4", "3pi/4", "3*pi/4", "pi", "1/3" into radians.
double parse_angle(std::string_view text);

/// Parses "a1,a2,b1,b2".
AngleSet parse_angles(std::string_view text);

/// Comma-separated list of reals.
std::vector<double> parse_list(std::string_view text);

/// "LO:HI:STEPS" → STEPS evenly spaced points from LO to HI inclusive.
std::vector<double> parse_range(std::string_view text);

/// Runs the command line. argv[0] is the program name. Output records go to
/// `out` (or the --out file); diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chsh::cli
