#include "rotameniscus/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace rotameniscus {

std::string format_number(double x, int significant_digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general,
                           significant_digits);
  return std::string(buf.data(), res.ptr);
}

double round_significant(double x, int significant_digits) {
  if (!std::isfinite(x)) return x;
  const auto text = format_number(x, significant_digits);
  return *parse_number(text);
}

std::optional<double> parse_number(std::string_view text) {
  if (text.empty()) return std::nullopt;
  // from_chars rejects a leading '+'.
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace rotameniscus
