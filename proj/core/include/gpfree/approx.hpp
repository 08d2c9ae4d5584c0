#pragma once

#include <cmath>

namespace gpfree {

/// A real number known to lie in [value - error_bound, value + error_bound].
struct ApproxValue {
  long double value = 0;
  long double error_bound = 0;

  long double lo() const noexcept { return value - error_bound; }
  long double hi() const noexcept { return value + error_bound; }
  bool contains(long double x) const noexcept { return lo() <= x && x <= hi(); }
  bool encloses(const ApproxValue& inner) const noexcept { return lo() <= inner.lo() && inner.hi() <= hi(); }
  bool overlaps(const ApproxValue& other) const noexcept {
    return std::fabs(value - other.value) <= error_bound + other.error_bound;
  }
};

ApproxValue operator*(const ApproxValue& a, const ApproxValue& b);
ApproxValue operator/(const ApproxValue& a, const ApproxValue& b);

/// exp of an enclosed logarithm: exp([s - e, s + e]) re-centred on exp(s).
ApproxValue exp_enclosure(long double log_value, long double log_error);

}  // namespace gpfree
