#include "gpfree/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace gpfree {

std::string format_fixed(double value, int decimals) {
  std::array<char, 128> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
  return std::string(buf.data(), ptr);
}

std::string format_significant(double value, int digits) {
  std::array<char, 128> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, digits);
  return std::string(buf.data(), ptr);
}

double round_significant(double value, int digits) {
  if (value == 0 || !std::isfinite(value)) return value;
  const std::string s = format_significant(value, digits);
  double out = 0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

}  // namespace gpfree
