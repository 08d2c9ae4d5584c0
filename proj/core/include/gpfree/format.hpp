#pragma once

#include <string>

namespace gpfree {

// Locale-independent renderings ('.' separator, no grouping).
std::string format_fixed(double value, int decimals);
std::string format_significant(double value, int digits = 12);

// Round to `digits` significant digits and back, so serializers that emit the
// shortest round-trip form print at most that many digits.
double round_significant(double value, int digits = 12);

}  // namespace gpfree
