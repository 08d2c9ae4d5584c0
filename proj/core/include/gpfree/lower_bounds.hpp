#pragma once

// Interval-union constructions: sets of elements whose norm, scaled by M,
// falls in a union of intervals (1/a, 1/b]. Exact densities, an exact
// certificate that no progression fits inside, and finite-M checks.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpfree/field.hpp"
#include "gpfree/rational.hpp"

namespace gpfree {

/// (1/a, 1/b] with a > b >= 1.
struct Interval {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  Rational lo() const { return Rational(1, static_cast<std::int64_t>(a)); }
  Rational hi() const { return Rational(1, static_cast<std::int64_t>(b)); }
  bool contains(const Rational& x) const { return x > lo() && x <= hi(); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalSystem {
  FieldSpec field;
  std::vector<Interval> intervals;  // ascending, pairwise disjoint

  std::uint64_t a_max() const;
  bool contains(const Rational& x) const;
};

/// Validates and sorts; DomainError on a <= b, b = 0 or overlaps.
IntervalSystem make_interval_system(const FieldSpec& field, std::vector<std::pair<std::uint64_t, std::uint64_t>> ab);

/// Fields with a built-in system.
std::span<const std::int64_t> preset_fields();
/// NoPreset unless d is one of preset_fields().
IntervalSystem preset(std::int64_t d);

/// One `a b` pair per line; '#' starts a comment. ParseError names the line.
IntervalSystem parse_interval_system(std::istream& in, const FieldSpec& field);
IntervalSystem load_interval_system(const std::string& path, const FieldSpec& field);

/// Sum of 1/b - 1/a.
Rational density(const IntervalSystem& system);

enum class CertificateStatus { kCertified, kCounterexample };

enum class CaseKind {
  kThirdAbove,  // x and s x in the system, s^2 x tested
  kThirdBelow,  // x and s x in the system, x / s tested
  kMiddle,      // x and s^2 x in the system, s x tested
};

struct Violation {
  std::uint64_t s = 0;
  CaseKind kind = CaseKind::kThirdAbove;
  std::size_t first = 0;   // interval of x
  std::size_t second = 0;  // interval of s x (or s^2 x for kMiddle)
  std::size_t third = 0;   // interval hit by the implied term
  Rational x;
  std::array<Rational, 3> terms;  // t, s t, s^2 t, all inside the system
};

struct Certificate {
  CertificateStatus status = CertificateStatus::kCertified;
  std::optional<Violation> violation;
  std::uint64_t cases_checked = 0;
};

/// Scans achievable ratio norms 2 <= s <= s_max (a_max when 0) and all
/// ordered interval pairs, in exact arithmetic.
Certificate certify_gp_free(const IntervalSystem& system, std::uint64_t s_max = 0);

/// Re-checks a counterexample by direct membership.
bool violation_holds(const IntervalSystem& system, const Violation& v);

struct Chaining {
  std::uint64_t c = 0;
  bool verified = false;
};

/// c = a_max. With M' = c M^2 the bottom of the next scale sits exactly at
/// M, so a ratio whose norm exceeds M pushes the middle term past scale M.
Chaining chaining_constant(const IntervalSystem& system);

struct EmpiricalDensity {
  std::uint64_t m = 0;
  Rational proportion;
  std::optional<std::size_t> triples;  // set when the progression check ran
};

/// Share of elements of norm <= m whose norm lies in m * system, with an
/// optional exhaustive progression search. NotClassNumberOne otherwise.
EmpiricalDensity empirical_upper_density(const IntervalSystem& system, std::uint64_t m, bool check_triples = true);

}  // namespace gpfree
