#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sig6::cli {

/// Exit codes of every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Malformed flag values or out-of-range inputs; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Locale-independent parse of a complete decimal number.
double parse_number(std::string_view text);

/// Parses `start:stop:count` into an inclusive grid. When unit is set, a
/// bound may be written with a trailing K (`4K`, `-K`, `0.5K`) and is scaled
/// by *unit. Requires count >= 1 and start < stop.
std::vector<double> parse_grid(std::string_view text, std::optional<double> unit = std::nullopt);

/// Runs the command line (without the program name). Output goes to `out`
/// unless --output is given; diagnostics go to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sig6::cli
