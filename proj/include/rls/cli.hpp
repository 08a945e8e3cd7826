// Command-line front end. Kept in the library so tests can drive commands
// in-process with string streams.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rls::cli {

enum ExitCode : int { ok = 0, usage_error = 1, validation_failure = 2 };

// Default ceiling on N for the O(M^2 N^2) direct ISL; --allow-large lifts it.
inline constexpr unsigned long long default_max_n = 20000;
// Lengths up to which `isl` always cross-checks direct against spectral.
inline constexpr unsigned long long spectral_check_max_n = 199;

// Accepts decimals ("0.25") and rationals ("1/4").
double parse_fraction(std::string_view text);
// Comma and/or whitespace separated list of parse_fraction values.
std::vector<double> parse_fractions(std::string_view text);

// Locale-independent, `precision` significant digits.
std::string format_number(double value, int precision = 15);

// args excludes the program name. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rls::cli
