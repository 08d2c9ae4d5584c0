#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "gpfree/arith.hpp"
#include "gpfree/errors.hpp"
#include "gpfree/euler.hpp"
#include "gpfree/greedy_density.hpp"
#include "oracles.hpp"

using namespace gpfree;

namespace {

struct Row {
  std::int64_t d;
  long double density;
};

constexpr std::array<Row, 9> kNineFields = {{{-1, 0.762340L},
                                             {-2, 0.693857L},
                                             {-3, 0.825534L},
                                             {-7, 0.674713L},
                                             {-11, 0.742670L},
                                             {-19, 0.823728L},
                                             {-43, 0.898250L},
                                             {-67, 0.917371L},
                                             {-163, 0.933580L}}};

std::size_t squarefree_count(std::int64_t n) {
  std::vector<bool> sf(static_cast<std::size_t>(n) + 1, true);
  for (std::int64_t k = 2; k * k <= n; ++k) {
    for (std::int64_t m = k * k; m <= n; m += k * k) sf[static_cast<std::size_t>(m)] = false;
  }
  return static_cast<std::size_t>(std::count(sf.begin() + 1, sf.end(), true));
}

}  // namespace

TEST_CASE("Rankin density") {
  const DensityReport r = rankin_density();
  CHECK(std::fabs(r.value.value - 0.71974L) < 1e-5L);
  CHECK(r.value.error_bound < 1e-6L);
  CHECK_FALSE(r.field.has_value());
  CHECK(r.set_kind == SetKind::kG3Star);
  // both routes enclose the same number
  CHECK(r.value.overlaps(rankin_density_zeta()));
  CHECK(rankin_density_zeta(3).overlaps(rankin_density_zeta(6)));
  CHECK(std::fabs(rankin_density_zeta(3).value - rankin_density_zeta(6).value) < 1e-9L);
}

TEST_CASE("Rankin density against a direct partial product oracle") {
  const DensityReport r = rankin_density(20000);
  CHECK(std::fabs(r.value.value - oracle::rankin_partial(20000)) < 1e-13L);
}

TEST_CASE("element densities of the nine class-number-one fields") {
  for (const auto& row : kNineFields) {
    const DensityReport r = greedy_density_integers(make_field(row.d));
    INFO("d = " << row.d);
    CHECK(std::fabs(r.value.value - row.density) < 1e-5L);
    CHECK(r.set_kind == SetKind::kGK3);
  }
}

TEST_CASE("element densities need class number one") {
  try {
    greedy_density_integers(make_field(-5));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotClassNumberOne);
  }
}

TEST_CASE("ideal and element densities coincide for class number one") {
  for (const auto& row : kNineFields) {
    const FieldSpec f = make_field(row.d);
    REQUIRE(greedy_density_ideals(f).value.overlaps(greedy_density_integers(f).value));
  }
}

TEST_CASE("densities of the nine fields are ordered as expected") {
  std::vector<std::pair<long double, std::int64_t>> got;
  for (const auto& row : kNineFields) got.emplace_back(greedy_density_integers(make_field(row.d)).value.value, row.d);
  std::sort(got.begin(), got.end());
  std::vector<std::int64_t> order;
  for (auto& [v, d] : got) order.push_back(d);
  CHECK(order == std::vector<std::int64_t>{-7, -2, -11, -1, -19, -3, -43, -67, -163});
}

TEST_CASE("changing one prime from split to ramified to inert raises the product") {
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 101ULL}) {
    auto with = [q](FactorKind k) {
      return splitting_product(
          100000, [&](std::uint64_t p) { return p == q ? k : FactorKind::kFP; }, FactorKind::kFPSq);
    };
    const ApproxValue split = with(FactorKind::kFPSq);
    const ApproxValue ram = with(FactorKind::kFP);
    const ApproxValue inert = with(FactorKind::kFP2);
    REQUIRE(split.value < ram.value);
    REQUIRE(ram.value < inert.value);
  }
}

TEST_CASE("universal bounds") {
  const UniversalBounds u = universal_bounds();
  CHECK(std::fabs(u.lower.value - 0.518033L) < 1e-5L);
  CHECK(std::fabs(u.upper.value - 0.939735L) < 1e-5L);
  const long double rankin = rankin_density().value.value;
  CHECK(u.lower.value < rankin);
  CHECK(rankin < u.upper.value);
}

TEST_CASE("rational-ratio density is the universal upper bound") {
  const UniversalBounds u = universal_bounds();
  const DensityReport g = rational_ratio_density(make_field(-1));
  const DensityReport h = rational_ratio_density(make_field(-163));
  CHECK(std::fabs(g.value.value - 0.939735L) < 1e-5L);
  CHECK(std::fabs(g.value.value - h.value.value) < 1e-12L);
  CHECK(std::fabs(g.value.value - u.upper.value) < 1e-12L);
  CHECK(g.set_kind == SetKind::kHStarK3);
}

TEST_CASE("zeta and splitting routes agree") {
  std::vector<std::int64_t> ds(kClassNumberOneFields.begin(), kClassNumberOneFields.end());
  for (std::int64_t d : {-5, -6, 2, 3}) ds.push_back(d);
  // and fifty random imaginary fields
  std::mt19937_64 rng(20241014);
  std::uniform_int_distribution<std::int64_t> pick(2, 10000);
  while (ds.size() < 13 + 50) {
    const std::int64_t a = pick(rng);
    if (is_squarefree(a)) ds.push_back(-a);
  }
  for (std::int64_t d : ds) {
    const CharacterTable t = make_character_table(make_field(d), 100000);
    const ApproxValue zeta = ideal_density_zeta_route(t);
    const ApproxValue split = euler_product_by_splitting(t);
    INFO("d = " << d);
    REQUIRE(zeta.overlaps(split));
    REQUIRE(zeta.error_bound < 1e-4L);
  }
}

TEST_CASE("survey over the class-number-one range") {
  SurveyOptions o;
  o.abs_max = 163;
  const auto rows = survey(o);
  CHECK(rows.size() == squarefree_count(163));
  for (const auto& row : kNineFields) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const SurveyRow& r) { return r.d == row.d; });
    REQUIRE(it != rows.end());
    CHECK(std::fabs(it->density.value - row.density) < 1e-5L);
  }
  for (const auto& r : rows) {
    REQUIRE(r.density.value > 0.518033L);
    REQUIRE(r.density.value < 0.939735L);
    REQUIRE(r.discriminant == make_field(r.d).discriminant);
  }
}

TEST_CASE("survey output does not depend on the number of jobs") {
  SurveyOptions o;
  o.abs_max = 400;
  const auto serial = survey(o);
  o.jobs = 4;
  const auto parallel = survey(o);
  std::ostringstream a;
  std::ostringstream b;
  write_survey_csv(a, serial);
  write_survey_csv(b, parallel);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("d,discriminant,density,error_bound\n", 0) == 0);
}

TEST_CASE("survey field selection") {
  SurveyOptions o;
  o.abs_max = 10000;
  CHECK(survey_fields(o).size() == 6083);
  CHECK(survey_fields(o).size() == squarefree_count(10000));
  o.abs_max = 20;
  o.by_discriminant = true;
  auto ds = survey_fields(o);
  std::sort(ds.begin(), ds.end());
  CHECK(ds == std::vector<std::int64_t>{-19, -15, -11, -7, -5, -3, -2, -1});
}

TEST_CASE("histogram bins are half open") {
  std::vector<SurveyRow> rows;
  for (long double v : {0.5L, 0.55L, 0.5999L, 0.6L, 0.9499L, 0.95L, 0.3L}) rows.push_back({-1, -4, {v, 0}});
  const auto bins = histogram(rows, 0.05);
  REQUIRE(bins.size() == 9);
  CHECK(bins[0].count == 1);  // 0.5
  CHECK(bins[1].count == 2);  // 0.55, 0.5999
  CHECK(bins[2].count == 1);  // 0.6
  CHECK(bins[8].count == 1);  // 0.9499; 0.95 and 0.3 fall outside
  std::size_t total = 0;
  for (const auto& b : bins) total += b.count;
  CHECK(total == 5);
  CHECK_THROWS_AS(histogram(rows, 0.0), Error);
  std::ostringstream out;
  write_histogram_csv(out, bins);
  CHECK(out.str().rfind("bin_lo,bin_hi,count\n0.5,0.55,1\n", 0) == 0);
}
