#pragma once

// Brute-force ground truth over small norm ranges: arithmetic in O_K,
// enumeration of elements and ideals by norm, factorization, greedy
// progression-free sets built from the definition, and progression detection.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpfree/field.hpp"
#include "gpfree/rational.hpp"

namespace gpfree {

/// a + b*w with w = sqrt d (d = 2, 3 mod 4) or w = (1 + sqrt d)/2 (d = 1 mod 4).
struct QuadInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const QuadInt&, const QuadInt&) = default;
};

class QuadRing {
 public:
  explicit QuadRing(const FieldSpec& field);

  const FieldSpec& field() const noexcept { return field_; }
  bool half_integral_basis() const noexcept { return half_; }

  /// a^2 - d b^2, or a^2 + ab + ((1 - d)/4) b^2.
  std::int64_t norm(QuadInt x) const noexcept;
  QuadInt mul(QuadInt x, QuadInt y) const noexcept;
  QuadInt conj(QuadInt x) const noexcept;
  /// x / y when it lies in O_K.
  std::optional<QuadInt> divide(QuadInt x, QuadInt y) const;
  bool is_unit(QuadInt x) const noexcept { return norm(x) == 1 || norm(x) == -1; }

  /// The unit group; imaginary fields only (NotImaginary otherwise).
  const std::vector<QuadInt>& units() const;
  std::vector<QuadInt> associates(QuadInt x) const;
  /// Lexicographically largest (a, b) among the associates of x.
  QuadInt canonical_associate(QuadInt x) const;

 private:
  FieldSpec field_;
  bool half_ = false;
  std::int64_t c_ = 0;  // (d - 1)/4 when half_
  std::vector<QuadInt> units_;
};

/// A prime ideal above the rational prime p. `conjugate` separates the two
/// primes above a split p: conjugate c is (p, w - r_c) where r_0 < r_1 are the
/// roots of the minimal polynomial of w modulo p.
struct PrimeIdealTag {
  std::uint64_t p = 0;
  int conjugate = 0;
  SplitKind kind = SplitKind::kRamified;
  std::uint64_t norm = 0;

  friend auto operator<=>(const PrimeIdealTag&, const PrimeIdealTag&) = default;
};

/// Where ideals live: a quadratic field, or the rationals (one prime of norm
/// p above each p, reported as kRamified) for the classical integer case.
class IdealDomain {
 public:
  static IdealDomain rationals();
  explicit IdealDomain(const FieldSpec& field);

  bool is_rationals() const noexcept { return !field_.has_value(); }
  const FieldSpec& field() const;

  std::vector<PrimeIdealTag> primes_above(std::uint64_t p) const;
  /// All prime ideals of norm <= bound, sorted by (norm, p, conjugate).
  std::vector<PrimeIdealTag> prime_ideals_up_to(std::uint64_t bound) const;
  /// Number of ideals of norm n: sum_{m | n} chi(m) (1 for the rationals).
  std::uint64_t ideal_count_with_norm(std::uint64_t n) const;

 private:
  IdealDomain() = default;
  std::optional<FieldSpec> field_;
};

/// r_0 < r_1 (or the single root) of the minimal polynomial of w mod p.
std::vector<std::uint64_t> omega_roots_mod(const FieldSpec& field, std::uint64_t p);

struct IdealFactor {
  PrimeIdealTag tag;
  int exponent = 0;

  friend auto operator<=>(const IdealFactor&, const IdealFactor&) = default;
};

/// An integral ideal as its exponent vector over prime ideals.
class IdealVector {
 public:
  IdealVector() = default;
  /// Sorts, merges repeated tags and drops zero exponents.
  explicit IdealVector(std::vector<IdealFactor> factors);

  std::span<const IdealFactor> factors() const noexcept { return factors_; }
  bool is_unit() const noexcept { return factors_.empty(); }
  std::uint64_t norm() const noexcept;
  int exponent(const PrimeIdealTag& tag) const noexcept;
  /// Componentwise <=, i.e. this ideal divides `other`.
  bool divides(const IdealVector& other) const noexcept;

  friend IdealVector operator+(const IdealVector& x, const IdealVector& y);
  /// Requires y | x.
  friend IdealVector operator-(const IdealVector& x, const IdealVector& y);
  IdealVector scaled(int k) const;

  /// `p^e[_c]` tokens joined by '*'; "1" for the unit ideal.
  std::string to_string() const;

  friend auto operator<=>(const IdealVector&, const IdealVector&) = default;

 private:
  std::vector<IdealFactor> factors_;
};

/// Nonzero elements of norm <= bound sorted by (norm, a, b), optionally one
/// canonical representative per associate class. NotImaginary for real fields.
std::vector<QuadInt> enumerate_elements(const FieldSpec& field, std::uint64_t bound, bool up_to_associates);

/// Number of nonzero elements of norm <= bound.
std::uint64_t count_elements(const FieldSpec& field, std::uint64_t bound);

/// Coprime (a, b) with a^2 + b^2 <= bound, i.e. primitive Gaussian integers.
std::uint64_t count_primitive(std::uint64_t bound);

/// Prime-ideal exponents of x != 0; class-number-one imaginary fields only.
IdealVector factor_element(const FieldSpec& field, QuadInt x);

/// A generator of the (principal) prime ideal `tag`; class-number-one only.
QuadInt prime_element(const FieldSpec& field, const PrimeIdealTag& tag);

/// All ideals of norm <= bound, sorted by (norm, exponent vector).
std::vector<IdealVector> enumerate_ideals(const IdealDomain& domain, std::uint64_t bound);

struct IdealTriple {
  IdealVector first;
  IdealVector middle;
  IdealVector last;

  friend auto operator<=>(const IdealTriple&, const IdealTriple&) = default;
};

/// Every (v, v + w, v + 2w) with w != 0 whose three members lie in `items`,
/// sorted. Duplicate items are ignored.
std::vector<IdealTriple> find_gp_triples(std::span<const IdealVector> items);

/// True iff every prime exponent lies in A3*.
bool has_a3_exponents(const IdealVector& ideal) noexcept;
bool has_a3_exponents(std::uint64_t n);

enum class GreedyMode {
  kFieldRatio,     // ratio any non-unit of O_K
  kRationalRatio,  // ratio a rational integer with |r| >= 2
  kIdealRatio,     // ratio any nontrivial ideal
};

struct GreedyOptions {
  // Shuffle items of equal norm before processing.
  std::optional<std::uint64_t> tie_shuffle_seed;
};

struct ElementGreedySet {
  FieldSpec field;
  std::uint64_t norm_bound = 0;
  GreedyMode mode = GreedyMode::kFieldRatio;
  std::vector<QuadInt> elements;  // processing order
  std::vector<bool> included;     // parallel to elements

  std::size_t included_count() const noexcept;
  std::vector<QuadInt> included_elements() const;  // sorted
  std::vector<QuadInt> excluded_elements() const;  // sorted
};

struct IdealGreedySet {
  std::uint64_t norm_bound = 0;
  std::vector<IdealVector> ideals;  // processing order
  std::vector<bool> included;

  std::size_t included_count() const noexcept;
  std::vector<IdealVector> included_ideals() const;  // sorted
  std::vector<IdealVector> excluded_ideals() const;  // sorted
};

/// Greedy set of elements in norm order: an element is kept iff it is not the
/// last term of a progression whose first two terms were kept. Needs a
/// class-number-one imaginary field; mode kIdealRatio is rejected.
ElementGreedySet greedy_set(const FieldSpec& field, std::uint64_t bound, GreedyMode mode,
                            const GreedyOptions& options = {});

/// Greedy set of ideals (ratio a nontrivial ideal).
IdealGreedySet greedy_set(const IdealDomain& domain, std::uint64_t bound, const GreedyOptions& options = {});

/// |included| / |all items| exactly.
Rational empirical_density(const ElementGreedySet& set);
Rational empirical_density(const IdealGreedySet& set);
Rational empirical_density(std::size_t included, std::size_t total);

struct CharacterizationReport {
  std::size_t items = 0;
  std::size_t mismatches = 0;
  bool matches() const noexcept { return mismatches == 0; }
};

/// Greedy elements (field ratio) against "every prime exponent in A3*".
CharacterizationReport check_field_ratio_characterization(const ElementGreedySet& set);
/// Greedy elements (rational ratio) against "x = k y, y primitive, k in G3*".
CharacterizationReport check_rational_ratio_characterization(const ElementGreedySet& set);
/// Greedy ideals against "every prime exponent in A3*".
CharacterizationReport check_ideal_characterization(const IdealGreedySet& set);

/// `norm,a,b,included`.
void write_greedy_csv(std::ostream& out, const ElementGreedySet& set);
/// `norm,factorization,included`.
void write_greedy_csv(std::ostream& out, const IdealGreedySet& set);

}  // namespace gpfree
