#pragma once

// Densities of the greedy geometric-progression-free sets:
//   G3*      over the positive integers,
//   G_{K,3}  over O_K (class-number-one imaginary K),
//   G*_{K,3} over the ideals of any quadratic K,
//   H*_{K,3} ideals avoiding progressions with rational-integer ratio.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "gpfree/approx.hpp"
#include "gpfree/euler.hpp"
#include "gpfree/field.hpp"

namespace gpfree {

inline constexpr std::uint64_t kDefaultTruncPrime = 1'000'000;
inline constexpr std::uint64_t kSurveyTruncPrime = 100'000;

enum class SetKind { kG3Star, kGK3, kGStarK3, kHStarK3 };
enum class Route { kSplittingProduct, kZetaProduct };

struct DensityReport {
  std::optional<FieldSpec> field;  // empty for the rationals
  SetKind set_kind = SetKind::kG3Star;
  ApproxValue value;
  Route route = Route::kSplittingProduct;
};

/// Number of factors zeta(3^i)/zeta(2*3^i) kept before bounding the rest
/// (the first i with 3^i > 40 is dropped).
inline constexpr int kZetaRouteDepth = 3;

/// d(G3*) = prod_p f(p); the zeta route is evaluated too and must agree.
DensityReport rankin_density(std::uint64_t P = kDefaultTruncPrime);

/// (1/zeta(2)) prod_{i=1}^{depth} zeta(3^i)/zeta(2*3^i), remainder bounded.
ApproxValue rankin_density_zeta(int depth = kZetaRouteDepth);

/// d(G_{K,3}); NotClassNumberOne unless K is one of the nine fields.
DensityReport greedy_density_integers(const FieldSpec& field, std::uint64_t P = kDefaultTruncPrime);

/// d(G*_{K,3}) by the Dedekind-zeta route, cross-checked against the
/// splitting product (ConsistencyError on disagreement).
DensityReport greedy_density_ideals(const FieldSpec& field, std::uint64_t P = kDefaultTruncPrime);
DensityReport greedy_density_ideals(const CharacterTable& table);

/// (1/zeta_K(2)) prod_{i=1}^{depth} zeta_K(3^i)/zeta_K(2*3^i), remainder bounded.
ApproxValue ideal_density_zeta_route(const CharacterTable& table, int depth = kZetaRouteDepth);

struct UniversalBounds {
  ApproxValue lower;  // prod_p f(p)^2
  ApproxValue upper;  // prod_p f(p^2)
};

UniversalBounds universal_bounds(std::uint64_t P = kDefaultTruncPrime);

/// d(H*_{K,3}) = prod_p f(p^2); the field does not enter the formula.
DensityReport rational_ratio_density(const FieldSpec& field, std::uint64_t P = kDefaultTruncPrime);

struct SurveyOptions {
  std::int64_t abs_min = 1;
  std::int64_t abs_max = 10'000;
  std::uint64_t trunc_prime = kSurveyTruncPrime;
  unsigned jobs = 1;
  // Select fields by |discriminant| in [abs_min, abs_max] instead of |d|.
  bool by_discriminant = false;
};

struct SurveyRow {
  std::int64_t d = 0;
  std::int64_t discriminant = 0;
  ApproxValue density;
};

/// d(G*_{K,3}) for every imaginary Q(sqrt d) in range, sorted by |d|.
/// Output does not depend on `jobs`.
std::vector<SurveyRow> survey(const SurveyOptions& options);

/// The negative squarefree d selected by `options`, in survey order.
std::vector<std::int64_t> survey_fields(const SurveyOptions& options);

struct HistogramBin {
  double lo = 0;
  double hi = 0;
  std::size_t count = 0;
};

inline constexpr double kHistogramLo = 0.5;
inline constexpr double kHistogramHi = 0.95;

/// Half-open bins [lo, lo + w) covering [0.5, 0.95).
std::vector<HistogramBin> histogram(std::span<const SurveyRow> rows, double bin_width);

/// `d,discriminant,density,error_bound`, LF line endings.
void write_survey_csv(std::ostream& out, std::span<const SurveyRow> rows);

/// `bin_lo,bin_hi,count`.
void write_histogram_csv(std::ostream& out, std::span<const HistogramBin> bins);

}  // namespace gpfree
