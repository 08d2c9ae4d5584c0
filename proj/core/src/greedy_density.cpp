#include "gpfree/greedy_density.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <string>
#include <thread>

#include "gpfree/arith.hpp"
#include "gpfree/errors.hpp"
#include "gpfree/format.hpp"

namespace gpfree {

namespace {

// Bound on |log(Z(s)/Z(2s))| for the dropped factors, where Z is zeta or
// zeta_K: log Z(s) <= 4 * 2^-s once s >= 81.
long double zeta_route_remainder(int depth) {
  long double bound = 0;
  long double s = std::pow(3.0L, depth + 1);
  for (int i = depth + 1; i < depth + 6; ++i, s *= 3) bound += 8 * std::pow(2.0L, -s);
  return bound;
}

int pow3(int i) {
  int v = 1;
  while (i-- > 0) v *= 3;
  return v;
}

void check_agreement(const ApproxValue& a, const ApproxValue& b, const std::string& what) {
  if (!a.overlaps(b)) {
    throw Error(ErrorKind::kConsistencyError, what + ": splitting and zeta routes disagree");
  }
}

}  // namespace

ApproxValue rankin_density_zeta(int depth) {
  ApproxValue v = ApproxValue{1, 0} / riemann_zeta_int(2);
  for (int i = 1; i <= depth; ++i) {
    const int s = pow3(i);
    v = v * (riemann_zeta_int(s) / riemann_zeta_int(2 * s));
  }
  return v * exp_enclosure(0, zeta_route_remainder(depth));
}

DensityReport rankin_density(std::uint64_t P) {
  const ApproxValue splitting =
      splitting_product(P, [](std::uint64_t) { return FactorKind::kFP; }, FactorKind::kFP);
  check_agreement(splitting, rankin_density_zeta(), "rankin_density");
  return {std::nullopt, SetKind::kG3Star, splitting, Route::kSplittingProduct};
}

DensityReport greedy_density_integers(const FieldSpec& field, std::uint64_t P) {
  if (!field.class_number_one) {
    throw Error(ErrorKind::kNotClassNumberOne,
                "element densities need a class-number-one imaginary field, got d = " + std::to_string(field.d));
  }
  return {field, SetKind::kGK3, euler_product_by_splitting(field, P), Route::kSplittingProduct};
}

ApproxValue ideal_density_zeta_route(const CharacterTable& table, int depth) {
  ApproxValue v = ApproxValue{1, 0} / dedekind_zeta(table, 2);
  for (int i = 1; i <= depth; ++i) {
    const int s = pow3(i);
    v = v * (dedekind_zeta(table, s) / dedekind_zeta(table, 2 * s));
  }
  return v * exp_enclosure(0, zeta_route_remainder(depth));
}

DensityReport greedy_density_ideals(const CharacterTable& table) {
  const ApproxValue zeta = ideal_density_zeta_route(table);
  check_agreement(euler_product_by_splitting(table), zeta, "greedy_density_ideals(d = " + std::to_string(table.field.d) + ")");
  return {table.field, SetKind::kGStarK3, zeta, Route::kZetaProduct};
}

DensityReport greedy_density_ideals(const FieldSpec& field, std::uint64_t P) {
  return greedy_density_ideals(make_character_table(field, P));
}

UniversalBounds universal_bounds(std::uint64_t P) {
  return {splitting_product(P, [](std::uint64_t) { return FactorKind::kFPSq; }, FactorKind::kFPSq),
          splitting_product(P, [](std::uint64_t) { return FactorKind::kFP2; }, FactorKind::kFP2)};
}

DensityReport rational_ratio_density(const FieldSpec& field, std::uint64_t P) {
  return {field, SetKind::kHStarK3,
          splitting_product(P, [](std::uint64_t) { return FactorKind::kFP2; }, FactorKind::kFP2),
          Route::kSplittingProduct};
}

std::vector<std::int64_t> survey_fields(const SurveyOptions& options) {
  std::vector<std::int64_t> ds;
  const std::int64_t lo = std::max<std::int64_t>(options.abs_min, 1);
  const std::int64_t hi = options.abs_max;
  if (!options.by_discriminant) {
    for (std::int64_t a = lo; a <= hi; ++a) {
      if (is_squarefree(a)) ds.push_back(-a);
    }
    return ds;
  }
  // |D| = |d| or 4|d|, so |d| <= hi suffices for the scan.
  for (std::int64_t a = 1; a <= hi; ++a) {
    if (!is_squarefree(a)) continue;
    const std::int64_t D = make_field(-a).discriminant;
    if (-D >= lo && -D <= hi) ds.push_back(-a);
  }
  return ds;
}

std::vector<SurveyRow> survey(const SurveyOptions& options) {
  const std::vector<std::int64_t> ds = survey_fields(options);
  std::vector<SurveyRow> rows(ds.size());
  if (ds.empty()) return rows;
  // Build the shared tables before workers start.
  (void)prime_table(options.trunc_prime);
  {
    const CharacterTable warm = make_character_table(make_field(ds.front()), options.trunc_prime);
    rows[0] = {ds.front(), warm.field.discriminant, greedy_density_ideals(warm).value};
  }

  std::atomic<std::size_t> next{1};
  auto worker = [&] {
    for (std::size_t i = next++; i < ds.size(); i = next++) {
      const CharacterTable table = make_character_table(make_field(ds[i]), options.trunc_prime);
      rows[i] = {ds[i], table.field.discriminant, greedy_density_ideals(table).value};
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return rows;
}

std::vector<HistogramBin> histogram(std::span<const SurveyRow> rows, double bin_width) {
  if (!(bin_width > 0)) throw Error(ErrorKind::kDomainError, "bin width must be positive");
  const auto nbins = static_cast<std::size_t>(std::ceil((kHistogramHi - kHistogramLo) / bin_width - 1e-9));
  std::vector<HistogramBin> bins(nbins);
  for (std::size_t k = 0; k < nbins; ++k) {
    bins[k].lo = kHistogramLo + static_cast<double>(k) * bin_width;
    bins[k].hi = std::min(kHistogramLo + static_cast<double>(k + 1) * bin_width, kHistogramHi);
  }
  for (const auto& row : rows) {
    const double v = static_cast<double>(row.density.value);
    if (v < kHistogramLo || v >= kHistogramHi) continue;
    auto k = std::min(nbins - 1, static_cast<std::size_t>(std::floor((v - kHistogramLo) / bin_width)));
    // Floating-point edges: settle by comparing against the stored bounds.
    while (k > 0 && v < bins[k].lo) --k;
    while (k + 1 < nbins && v >= bins[k].hi) ++k;
    ++bins[k].count;
  }
  return bins;
}

void write_survey_csv(std::ostream& out, std::span<const SurveyRow> rows) {
  out << "d,discriminant,density,error_bound\n";
  for (const auto& row : rows) {
    out << row.d << ',' << row.discriminant << ',' << format_fixed(static_cast<double>(row.density.value), 12) << ','
        << format_significant(static_cast<double>(row.density.error_bound), 12) << '\n';
  }
}

void write_histogram_csv(std::ostream& out, std::span<const HistogramBin> bins) {
  out << "bin_lo,bin_hi,count\n";
  for (const auto& bin : bins) {
    out << format_significant(bin.lo, 12) << ',' << format_significant(bin.hi, 12) << ',' << bin.count << '\n';
  }
}

}  // namespace gpfree
