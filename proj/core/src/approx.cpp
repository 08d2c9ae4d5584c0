#include "gpfree/approx.hpp"

#include <cfloat>
#include <cmath>
#include <limits>

#include "gpfree/errors.hpp"

namespace gpfree {

namespace {

// Covers the rounding of the centre value itself.
long double rounding_slack(long double v) { return 4 * LDBL_EPSILON * std::fabs(v); }

}  // namespace

ApproxValue operator*(const ApproxValue& a, const ApproxValue& b) {
  const long double v = a.value * b.value;
  const long double e = std::fabs(a.value) * b.error_bound + std::fabs(b.value) * a.error_bound +
                        a.error_bound * b.error_bound;
  return {v, e * (1 + 8 * LDBL_EPSILON) + rounding_slack(v)};
}

ApproxValue operator/(const ApproxValue& a, const ApproxValue& b) {
  const long double denom = std::fabs(b.value) - b.error_bound;
  if (!(denom > 0)) throw Error(ErrorKind::kDomainError, "division by an enclosure containing zero");
  const long double v = a.value / b.value;
  const long double e = (a.error_bound + std::fabs(v) * b.error_bound) / denom;
  return {v, e * (1 + 8 * LDBL_EPSILON) + rounding_slack(v)};
}

ApproxValue exp_enclosure(long double log_value, long double log_error) {
  const long double v = std::exp(log_value);
  // exp(s + e) - exp(s) >= exp(s) - exp(s - e), so the upper side dominates.
  const long double e = v * std::expm1(log_error);
  return {v, e * (1 + 8 * LDBL_EPSILON) + rounding_slack(v)};
}

}  // namespace gpfree
