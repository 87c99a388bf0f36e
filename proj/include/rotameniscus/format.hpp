#pragma once

// Locale-independent number formatting and parsing.

#include <optional>
#include <string>
#include <string_view>

namespace rotameniscus {

/// Shortest general-format text with the given significant digits
/// ("1.5", "2.5e-07", "inf", "nan").
std::string format_number(double x, int significant_digits = 12);

/// x rounded to the given significant digits (what format_number prints).
double round_significant(double x, int significant_digits = 12);

/// Whole-string parse; nullopt on trailing garbage or empty input.
std::optional<double> parse_number(std::string_view text);

}  // namespace rotameniscus
