#include "gpfree/field.hpp"

#include <algorithm>
#include <string>

#include "gpfree/arith.hpp"
#include "gpfree/errors.hpp"

namespace gpfree {

FieldSpec make_field(std::int64_t d) {
  if (d == 0 || d == 1) {
    throw Error(ErrorKind::kInvalidD, "d must not be 0 or 1, got " + std::to_string(d));
  }
  if (!is_squarefree(d)) {
    throw Error(ErrorKind::kNonSquarefree, "d = " + std::to_string(d) + " is not squarefree");
  }
  FieldSpec field;
  field.d = d;
  field.discriminant = (((d % 4) + 4) % 4 == 1) ? d : 4 * d;
  field.is_imaginary = d < 0;
  field.class_number_one =
      std::find(kClassNumberOneFields.begin(), kClassNumberOneFields.end(), d) != kClassNumberOneFields.end();
  return field;
}

int quad_character(const FieldSpec& field, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::kDomainError, "quad_character requires n >= 1");
  return kronecker(field.discriminant, n);
}

SplitType split_type(const FieldSpec& field, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
  switch (kronecker(field.discriminant, p)) {
    case -1: return {SplitKind::kInert, {p * p}};
    case 1: return {SplitKind::kSplit, {p, p}};
    default: return {SplitKind::kRamified, {p}};
  }
}

bool achievable_norm(const FieldSpec& field, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::kDomainError, "achievable_norm requires n >= 1");
  for (auto [p, e] : factorize(n)) {
    if (e % 2 == 1 && kronecker(field.discriminant, p) == -1) return false;
  }
  return true;
}

std::vector<std::uint64_t> smallest_nonunit_norms(const FieldSpec& field, std::size_t k) {
  if (k == 0) return {};
  std::vector<std::uint64_t> norms;
  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime(p)) continue;
    // Every later prime ideal has norm >= p, so once k norms <= p are known we are done.
    if (norms.size() >= k) {
      std::sort(norms.begin(), norms.end());
      if (norms[k - 1] <= p) break;
    }
    for (auto n : split_type(field, p).norms) norms.push_back(n);
  }
  norms.resize(k);
  return norms;
}

}  // namespace gpfree
