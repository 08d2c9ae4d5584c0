#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace gpfree {

// The nine imaginary quadratic fields Q(sqrt d) with class number one.
inline constexpr std::array<std::int64_t, 9> kClassNumberOneFields = {-1, -2, -3, -7, -11, -19, -43, -67, -163};

/// A quadratic field Q(sqrt d), d squarefree and d != 0, 1.
struct FieldSpec {
  std::int64_t d = -1;
  std::int64_t discriminant = -4;  // d if d = 1 mod 4, else 4d
  bool is_imaginary = true;
  bool class_number_one = true;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Validates d (NonSquarefree, InvalidD) and fills the derived fields.
FieldSpec make_field(std::int64_t d);

/// Kronecker symbol (D/n) of the field discriminant; completely
/// multiplicative in n and zero exactly when gcd(n, D) > 1.
int quad_character(const FieldSpec& field, std::uint64_t n);

enum class SplitKind { kInert, kSplit, kRamified };

/// How a rational prime p decomposes, with the norms of the prime ideals above
/// it: inert -> {p^2}, split -> {p, p}, ramified -> {p}.
struct SplitType {
  SplitKind kind = SplitKind::kInert;
  std::vector<std::uint64_t> norms;
};

SplitType split_type(const FieldSpec& field, std::uint64_t p);

/// True iff n is the norm of a nonzero ideal: every inert prime divides n to
/// an even power.
bool achievable_norm(const FieldSpec& field, std::uint64_t n);

/// The k smallest prime-ideal norms, listed with multiplicity.
std::vector<std::uint64_t> smallest_nonunit_norms(const FieldSpec& field, std::size_t k);

}  // namespace gpfree
