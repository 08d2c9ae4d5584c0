#include "gpfree/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace gpfree {

std::string to_fraction_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& r, int digits) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * scale;
  BigInt q = scaled / den;
  BigInt rem = scaled % den;
  if (2 * rem > den || (2 * rem == den && q % 2 == 1)) ++q;

  std::string s = q.str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative && q != 0) s.insert(0, "-");
  return s;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace gpfree
