#pragma once

// Upper bounds on the upper density of progression-free sets: the Riddell
// bound from the smallest non-unit norm, and improved bounds from exact
// minimum exclusion counts among elements built from three small primes.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gpfree/field.hpp"
#include "gpfree/hitting_set.hpp"
#include "gpfree/lattice.hpp"
#include "gpfree/rational.hpp"

namespace gpfree {

inline constexpr std::uint64_t kExclusionLimit = 2000;

/// (q^3 - q)/(q^3 - 1) with q the smallest non-unit norm.
Rational riddell_bound(const FieldSpec& field);

/// The three prime ideals of smallest norm, ordered by (norm, p, conjugate).
std::vector<PrimeIdealTag> smooth_prime_tags(const FieldSpec& field);

struct SmoothElement {
  std::array<int, 3> exponents{};
  std::uint64_t norm = 1;

  friend auto operator<=>(const SmoothElement&, const SmoothElement&) = default;
};

/// Exponent vectors over `tag_norms` (1 to 3 entries) with norm <= bound,
/// sorted by (norm, exponents).
std::vector<SmoothElement> smooth_elements(std::span<const std::uint64_t> tag_norms, std::uint64_t bound);
std::vector<SmoothElement> smooth_elements(const FieldSpec& field, std::uint64_t bound);

/// Triples (v, v+w, v+2w), w >= 0, w != 0, as a hypergraph on the indices
/// of `elements`; edges sorted by their largest index.
Hypergraph smooth_triple_graph(std::span<const SmoothElement> elements);

struct ExclusionThreshold {
  std::uint64_t norm = 0;
  std::size_t cumulative_exclusions = 0;
  std::size_t packing_bound = 0;  // disjoint triples found at this threshold
  std::uint64_t search_nodes = 0;

  friend bool operator==(const ExclusionThreshold&, const ExclusionThreshold&) = default;
};

struct ExclusionProfile {
  std::vector<std::uint64_t> tag_norms;
  std::vector<PrimeIdealTag> prime_tags;  // empty for a bare norm list
  std::uint64_t n_max = 0;
  std::vector<ExclusionThreshold> thresholds;
  std::vector<SmoothElement> final_exclusions;  // an optimal set at n_max
};

/// Norms where the minimum exclusion count increases, with the counts.
/// LimitExceeded if n_max > limit.
ExclusionProfile exclusion_profile(std::span<const std::uint64_t> tag_norms, std::uint64_t n_max,
                                   std::uint64_t limit = kExclusionLimit);
ExclusionProfile exclusion_profile(const FieldSpec& field, std::uint64_t n_max, std::uint64_t limit = kExclusionLimit);

struct MinExclusions {
  std::size_t count = 0;
  std::vector<SmoothElement> excluded;
  std::size_t packing_bound = 0;
};

MinExclusions min_exclusions(const FieldSpec& field, std::uint64_t n, std::uint64_t limit = kExclusionLimit);

/// prod over the tags of (1 - 1/norm).
Rational coprime_density(std::span<const std::uint64_t> tag_norms);
Rational coprime_density(const FieldSpec& field);

/// 1 - coprime_density * sum_j (increment_j / N_j).
Rational improved_bound(const ExclusionProfile& profile);
Rational improved_bound(const FieldSpec& field, std::uint64_t n_max, std::uint64_t limit = kExclusionLimit);

struct UpperBoundReport {
  FieldSpec field;
  std::uint64_t q = 0;
  std::uint64_t n_max = 0;
  Rational riddell;
  Rational improved;
  Rational best;  // the smaller of the two
};

UpperBoundReport upper_bound_report(const FieldSpec& field, std::uint64_t n_max, std::uint64_t limit = kExclusionLimit);

}  // namespace gpfree
