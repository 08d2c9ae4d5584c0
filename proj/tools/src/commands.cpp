#include "commands.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gpfree/errors.hpp"
#include "gpfree/euler.hpp"
#include "gpfree/field.hpp"
#include "gpfree/format.hpp"
#include "gpfree/greedy_density.hpp"
#include "gpfree/lattice.hpp"
#include "gpfree/lower_bounds.hpp"
#include "gpfree/upper_bounds.hpp"

namespace gpfree::cli {

namespace {

FieldSpec require_field(const Options& o) {
  if (!o.d) throw UsageError{"--d is required"};
  return make_field(*o.d);
}

std::uint64_t trunc_prime(const Options& o, std::uint64_t fallback) { return o.trunc_prime.value_or(fallback); }

const char* kind_name(SplitKind k) {
  switch (k) {
    case SplitKind::kInert: return "inert";
    case SplitKind::kSplit: return "split";
    case SplitKind::kRamified: return "ramified";
  }
  return "?";
}

Json exact(const Rational& r) {
  return Json{{"fraction", to_fraction_string(r)}, {"decimal", to_decimal(r, 12)}, {"value", num(to_double(r))}};
}

// A density value with its certified radius.
void put_value(Json& results, Json& bounds, const std::string& key, const ApproxValue& v) {
  results[key] = num(v.value);
  results[key + "_6"] = format_fixed(static_cast<double>(v.value), 6);
  bounds[key] = num(v.error_bound);
}

Json report_payload(const DensityReport& r, Json& bounds) {
  Json results;
  if (r.field) results["d"] = r.field->d;
  results["route"] = r.route == Route::kZetaProduct ? "zeta" : "splitting";
  put_value(results, bounds, "value", r.value);
  return results;
}

}  // namespace

Output field_info(const Options& o) {
  const FieldSpec f = require_field(o);
  Json results;
  results["d"] = f.d;
  results["discriminant"] = f.discriminant;
  results["imaginary"] = f.is_imaginary;
  results["class_number_one"] = f.class_number_one;
  results["smallest_norms"] = smallest_nonunit_norms(f, 3);
  if (f.is_imaginary) results["units"] = QuadRing(f).units().size();
  Json primes = Json::array();
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const SplitType st = split_type(f, p);
    primes.push_back({{"p", p}, {"kind", kind_name(st.kind)}, {"norms", st.norms}});
  }
  results["splitting"] = primes;
  return {envelope("field-info", {{"d", f.d}}, results, {}), std::nullopt};
}

Output density_rankin(const Options& o) {
  const std::uint64_t P = trunc_prime(o, kDefaultTruncPrime);
  const DensityReport r = rankin_density(P);
  Json bounds;
  Json results = report_payload(r, bounds);
  const ApproxValue zeta = rankin_density_zeta();
  results["zeta_route"] = num(zeta.value);
  bounds["zeta_route"] = num(zeta.error_bound);
  return {envelope("density rankin", {{"trunc_prime", P}}, results, bounds), std::nullopt};
}

Output density_greedy(const Options& o) {
  const FieldSpec f = require_field(o);
  const std::uint64_t P = trunc_prime(o, kDefaultTruncPrime);
  Json bounds;
  Json results = report_payload(greedy_density_integers(f, P), bounds);
  return {envelope("density greedy", {{"d", f.d}, {"trunc_prime", P}}, results, bounds), std::nullopt};
}

Output density_ideals(const Options& o) {
  const FieldSpec f = require_field(o);
  const std::uint64_t P = trunc_prime(o, kDefaultTruncPrime);
  const CharacterTable table = make_character_table(f, P);
  Json bounds;
  Json results = report_payload(greedy_density_ideals(table), bounds);
  const ApproxValue split = euler_product_by_splitting(table);
  results["splitting_route"] = num(split.value);
  bounds["splitting_route"] = num(split.error_bound);
  return {envelope("density ideals", {{"d", f.d}, {"trunc_prime", P}}, results, bounds), std::nullopt};
}

Output density_rational_ratio(const Options& o) {
  const FieldSpec f = require_field(o);
  const std::uint64_t P = trunc_prime(o, kDefaultTruncPrime);
  Json bounds;
  Json results = report_payload(rational_ratio_density(f, P), bounds);
  return {envelope("density rational-ratio", {{"d", f.d}, {"trunc_prime", P}}, results, bounds), std::nullopt};
}

Output bounds_universal(const Options& o) {
  const std::uint64_t P = trunc_prime(o, kDefaultTruncPrime);
  const UniversalBounds u = universal_bounds(P);
  Json results;
  Json bounds;
  put_value(results, bounds, "lower", u.lower);
  put_value(results, bounds, "upper", u.upper);
  return {envelope("bounds universal", {{"trunc_prime", P}}, results, bounds), std::nullopt};
}

Output bounds_riddell(const Options& o) {
  const FieldSpec f = require_field(o);
  const Rational r = riddell_bound(f);
  const std::uint64_t q = smallest_nonunit_norms(f, 1).at(0);
  Json results{{"d", f.d}, {"q", q}, {"riddell", to_fraction_string(r)}, {"value", num(to_double(r))}};
  std::ostringstream csv;
  csv << "d,q,riddell,value\n" << f.d << ',' << q << ',' << to_fraction_string(r) << ','
      << format_significant(to_double(r), 12) << '\n';
  return {envelope("bounds riddell", {{"d", f.d}}, results, {}), csv.str()};
}

Output bounds_smooth(const Options& o) {
  const FieldSpec f = require_field(o);
  const ExclusionProfile profile = exclusion_profile(f, o.nmax);
  const Rational riddell = riddell_bound(f);
  const Rational improved = improved_bound(profile);
  Json thresholds = Json::array();
  std::ostringstream csv;
  csv << "N,cumulative_exclusions\n";
  for (const auto& t : profile.thresholds) {
    thresholds.push_back(
        {{"N", t.norm}, {"cumulative_exclusions", t.cumulative_exclusions}, {"packing_bound", t.packing_bound}});
    csv << t.norm << ',' << t.cumulative_exclusions << '\n';
  }
  Json results;
  results["d"] = f.d;
  results["q"] = smallest_nonunit_norms(f, 1).at(0);
  results["riddell"] = num(to_double(riddell));
  results["riddell_exact"] = to_fraction_string(riddell);
  results["improved"] = num(to_double(improved));
  results["improved_exact"] = to_fraction_string(improved);
  results["best"] = num(to_double(std::min(riddell, improved)));
  results["n_max"] = o.nmax;
  results["tag_norms"] = profile.tag_norms;
  results["coprime_density"] = to_fraction_string(coprime_density(profile.tag_norms));
  results["thresholds"] = thresholds;
  return {envelope("bounds smooth", {{"d", f.d}, {"nmax", o.nmax}}, results, {}), csv.str()};
}

Output bounds_lower(const Options& o) {
  const FieldSpec f = require_field(o);
  if (o.preset == o.intervals.has_value()) throw UsageError{"give exactly one of --preset or --intervals"};
  const IntervalSystem system = o.preset ? preset(f.d) : load_interval_system(*o.intervals, f);
  const Rational dens = density(system);
  const Certificate cert = certify_gp_free(system);
  const Chaining chain = chaining_constant(system);

  Json results;
  results["d"] = f.d;
  Json intervals = Json::array();
  for (const auto& iv : system.intervals) intervals.push_back({iv.a, iv.b});
  results["intervals"] = intervals;
  results["density"] = exact(dens);
  results["status"] = cert.status == CertificateStatus::kCertified ? "CERTIFIED" : "COUNTEREXAMPLE";
  results["cases_checked"] = cert.cases_checked;
  results["chaining_constant"] = chain.c;
  results["chaining_verified"] = chain.verified;
  if (cert.violation) {
    const Violation& v = *cert.violation;
    const char* kind = v.kind == CaseKind::kThirdAbove ? "third_above" : v.kind == CaseKind::kThirdBelow ? "third_below"
                                                                                                       : "middle";
    Json terms = Json::array();
    for (const auto& t : v.terms) terms.push_back(to_fraction_string(t));
    results["violation"] = {{"s", v.s},
                            {"case", kind},
                            {"intervals", {v.first, v.second, v.third}},
                            {"witness", to_fraction_string(v.x)},
                            {"terms", terms}};
  }
  if (o.preset && f.d == -1) {
    // The commonly quoted lower bound for Q(i) does not equal the exact sum.
    const double quoted = 0.844662;
    results["reference_density"] = quoted;
    results["reference_gap"] = num(quoted - to_double(dens));
    results["flag"] = "exact interval sum differs from the quoted 0.844662";
  }
  Json params{{"d", f.d}, {"preset", o.preset}};
  if (o.intervals) params["intervals"] = *o.intervals;
  if (o.norm_max) {
    const EmpiricalDensity e = empirical_upper_density(system, *o.norm_max, true);
    results["empirical"] = {{"M", e.m}, {"proportion", exact(e.proportion)}, {"triples", *e.triples}};
    params["norm_max"] = *o.norm_max;
  }
  return {envelope("bounds lower", params, results, {}), std::nullopt};
}

Output verify_greedy(const Options& o) {
  const std::uint64_t bound = o.norm_max.value_or(1000);
  Json params{{"mode", o.mode}, {"norm_max", bound}};
  Json results;
  std::ostringstream csv;
  Rational dens;
  std::size_t total = 0;
  std::size_t kept = 0;
  if (o.mode == "ideal") {
    const IdealDomain domain = o.d ? IdealDomain(make_field(*o.d)) : IdealDomain::rationals();
    const IdealGreedySet set = greedy_set(domain, bound);
    write_greedy_csv(csv, set);
    dens = empirical_density(set);
    total = set.ideals.size();
    kept = set.included_count();
  } else if (o.mode == "field" || o.mode == "rational") {
    const FieldSpec f = require_field(o);
    const ElementGreedySet set =
        greedy_set(f, bound, o.mode == "field" ? GreedyMode::kFieldRatio : GreedyMode::kRationalRatio);
    write_greedy_csv(csv, set);
    dens = empirical_density(set);
    total = set.elements.size();
    kept = set.included_count();
  } else {
    throw UsageError{"--mode must be field, rational or ideal"};
  }
  if (o.d) {
    params["d"] = *o.d;
    results["d"] = *o.d;
  }
  results["mode"] = o.mode;
  results["norm_bound"] = bound;
  results["total"] = total;
  results["included"] = kept;
  results["excluded"] = total - kept;
  results["empirical_density"] = exact(dens);
  return {envelope("verify greedy", params, results, {}), csv.str()};
}

Output verify_characterization(const Options& o) {
  const FieldSpec f = require_field(o);
  const std::uint64_t bound = o.norm_max.value_or(4096);
  auto report = [](const CharacterizationReport& r) {
    return Json{{"items", r.items}, {"mismatches", r.mismatches}, {"match", r.matches()}};
  };
  const auto field_ratio = check_field_ratio_characterization(greedy_set(f, bound, GreedyMode::kFieldRatio));
  const auto rational_ratio = check_rational_ratio_characterization(greedy_set(f, bound, GreedyMode::kRationalRatio));
  const auto ideal_ratio = check_ideal_characterization(greedy_set(IdealDomain(f), bound));
  Json results;
  results["d"] = f.d;
  results["norm_bound"] = bound;
  results["field_ratio"] = report(field_ratio);
  results["rational_ratio"] = report(rational_ratio);
  results["ideal_ratio"] = report(ideal_ratio);
  results["all_match"] = field_ratio.matches() && rational_ratio.matches() && ideal_ratio.matches();
  return {envelope("verify characterization", {{"d", f.d}, {"norm_max", bound}}, results, {}), std::nullopt};
}

Output verify_gauss(const Options& o) {
  const FieldSpec f = make_field(o.d.value_or(-1));
  const std::uint64_t bound = o.norm_max.value_or(1'000'000);
  const std::uint64_t all = count_elements(f, bound);
  // Elements of norm <= B fill an ellipse of area 2 pi B / sqrt|D|.
  const long double area =
      2.0L * std::numbers::pi_v<long double> * bound / std::sqrt(static_cast<long double>(-f.discriminant));
  Json results;
  results["d"] = f.d;
  results["norm_bound"] = bound;
  results["count_all"] = all;
  results["expected_area"] = num(area);
  results["lattice_error"] = num(static_cast<long double>(all) - area);
  results["lattice_error_over_sqrt_bound"] =
      num((static_cast<long double>(all) - area) / std::sqrt(static_cast<long double>(bound)));
  if (f.d == -1) {
    const std::uint64_t prim = count_primitive(bound);
    const long double ratio = static_cast<long double>(prim) / static_cast<long double>(all);
    const long double target = 6.0L / (std::numbers::pi_v<long double> * std::numbers::pi_v<long double>);
    results["count_primitive"] = prim;
    results["primitive_ratio"] = num(ratio);
    results["six_over_pi_squared"] = num(target);
    results["primitive_gap"] = num(ratio - target);
  }
  return {envelope("verify gauss", {{"d", f.d}, {"norm_max", bound}}, results, {}), std::nullopt};
}

Output survey(const Options& o) {
  SurveyOptions so;
  so.abs_min = o.dmin;
  so.abs_max = o.dmax;
  so.trunc_prime = trunc_prime(o, kSurveyTruncPrime);
  so.jobs = o.jobs;
  so.by_discriminant = o.by_discriminant;
  if (so.abs_min < 1 || so.abs_max < so.abs_min) throw UsageError{"need 1 <= --dmin <= --dmax"};
  if (!(o.bins > 0)) throw UsageError{"--bins must be positive"};
  const auto rows = gpfree::survey(so);
  const auto bins = histogram(rows, o.bins);

  std::ostringstream csv;
  write_survey_csv(csv, rows);
  if (o.hist_out) {
    std::ostringstream hist;
    write_histogram_csv(hist, bins);
    emit(hist.str(), o.hist_out, csv);
  }
  Json table = Json::array();
  long double lo = 1;
  long double hi = 0;
  long double worst = 0;
  for (const auto& r : rows) {
    table.push_back({{"d", r.d},
                     {"discriminant", r.discriminant},
                     {"density", num(r.density.value)},
                     {"error_bound", num(r.density.error_bound)}});
    lo = std::min(lo, r.density.value);
    hi = std::max(hi, r.density.value);
    worst = std::max(worst, r.density.error_bound);
  }
  Json hist = Json::array();
  for (const auto& b : bins) hist.push_back({{"lo", num(b.lo)}, {"hi", num(b.hi)}, {"count", b.count}});
  Json results;
  results["count"] = rows.size();
  results["rows"] = table;
  results["histogram"] = hist;
  if (!rows.empty()) {
    results["min_density"] = num(lo);
    results["max_density"] = num(hi);
  }
  Json params{{"dmin", o.dmin},          {"dmax", o.dmax}, {"trunc_prime", so.trunc_prime},
              {"by_discriminant", o.by_discriminant}, {"bins", o.bins}};
  return {envelope("survey", params, results, {{"density", num(worst)}}), csv.str()};
}

}  // namespace gpfree::cli
