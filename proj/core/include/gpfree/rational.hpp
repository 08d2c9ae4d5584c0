#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpfree {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

/// "p/q" (or "p" when q == 1).
std::string to_fraction_string(const Rational& r);

/// Exact decimal rendering with `digits` places, ties rounded half-even.
std::string to_decimal(const Rational& r, int digits);

double to_double(const Rational& r);

}  // namespace gpfree
