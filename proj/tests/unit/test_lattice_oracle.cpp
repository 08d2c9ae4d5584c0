#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "gpfree/errors.hpp"
#include "gpfree/euler.hpp"
#include "gpfree/lattice.hpp"
#include "oracles.hpp"

using namespace gpfree;

namespace {

std::set<oracle::Elt> as_oracle(const std::vector<QuadInt>& xs) {
  std::set<oracle::Elt> out;
  for (auto x : xs) out.insert({x.a, x.b});
  return out;
}

std::map<std::uint64_t, int> as_map(const IdealVector& v) {
  std::map<std::uint64_t, int> m;
  for (const auto& f : v.factors()) m[f.tag.p * 2 + static_cast<std::uint64_t>(f.tag.conjugate)] = f.exponent;
  return m;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::kDomainError;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  const QuadRing g(make_field(-1));
  CHECK(g.norm({3, 4}) == 25);
  CHECK(g.mul({1, 1}, {1, -1}) == QuadInt{2, 0});
  CHECK(g.divide({2, 0}, {1, 1}) == QuadInt{1, -1});
  CHECK_FALSE(g.divide({3, 0}, {1, 1}).has_value());
  CHECK(g.units().size() == 4);
  const QuadRing e(make_field(-3));
  CHECK(e.half_integral_basis());
  CHECK(e.units().size() == 6);
  CHECK(QuadRing(make_field(-7)).units().size() == 2);
  // N(xy) = N(x) N(y) and x conj(x) = N(x)
  for (std::int64_t d : {-1, -2, -3, -7, -11, -163}) {
    const QuadRing r(make_field(d));
    for (std::int64_t a = -4; a <= 4; ++a) {
      for (std::int64_t b = -4; b <= 4; ++b) {
        const QuadInt x{a, b};
        const QuadInt y{b - 1, a + 2};
        REQUIRE(r.norm(r.mul(x, y)) == r.norm(x) * r.norm(y));
        REQUIRE(r.mul(x, r.conj(x)) == QuadInt{r.norm(x), 0});
      }
    }
  }
  CHECK(kind_of([] { QuadRing(make_field(2)).units(); }) == ErrorKind::kNotImaginary);
}

TEST_CASE("element enumeration counts") {
  const FieldSpec g = make_field(-1);
  CHECK(enumerate_elements(g, 2, false).size() == 8);
  CHECK(enumerate_elements(g, 25, false).size() == 80);
  CHECK(count_elements(g, 25) == 80);
  CHECK(enumerate_elements(make_field(-3), 1, false).size() == 6);
  CHECK(kind_of([] { enumerate_elements(make_field(3), 10, false); }) == ErrorKind::kNotImaginary);
}

TEST_CASE("element enumeration agrees with a box scan") {
  for (auto d : kClassNumberOneFields) {
    const auto lib = enumerate_elements(make_field(d), 300, false);
    const auto box = oracle::elements_box_scan(oracle::Ring{d}, 300);
    REQUIRE(as_oracle(lib) == std::set<oracle::Elt>(box.begin(), box.end()));
    REQUIRE(lib.size() == box.size());
    const QuadRing r(make_field(d));
    REQUIRE(std::is_sorted(lib.begin(), lib.end(), [&](QuadInt x, QuadInt y) {
      return std::make_tuple(r.norm(x), x) < std::make_tuple(r.norm(y), y);
    }));
    // one representative per associate class
    const auto reps = enumerate_elements(make_field(d), 300, true);
    REQUIRE(reps.size() * r.units().size() == lib.size());
    for (auto x : reps) REQUIRE(r.canonical_associate(x) == x);
  }
}

TEST_CASE("primitive points") {
  std::uint64_t brute = 0;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      if (a * a + b * b <= 2 && std::gcd(a, b) == 1) ++brute;
    }
  }
  CHECK(count_primitive(2) == brute);
  CHECK(count_primitive(2) == 8);
  CHECK(count_primitive(1) == 4);
}

TEST_CASE("lattice point counts stay near the circle area") {
  const FieldSpec g = make_field(-1);
  for (std::uint64_t B : {100ULL, 1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
    const long double err = std::fabs(static_cast<long double>(count_elements(g, B)) -
                                      std::numbers::pi_v<long double> * static_cast<long double>(B));
    REQUIRE(err <= 8 * std::sqrt(static_cast<long double>(B)));
  }
}

TEST_CASE("factoring elements") {
  const FieldSpec g = make_field(-1);
  const IdealVector two = factor_element(g, {2, 0});
  REQUIRE(two.factors().size() == 1);
  CHECK(two.factors()[0].tag.p == 2);
  CHECK(two.factors()[0].exponent == 2);
  CHECK(QuadRing(g).norm({1, 1}) * QuadRing(g).norm({1, 1}) == 4);
  const IdealVector five = factor_element(g, {5, 0});
  REQUIRE(five.factors().size() == 2);
  CHECK(five.factors()[0].tag.conjugate != five.factors()[1].tag.conjugate);
  CHECK(five.factors()[0].exponent == 1);
  CHECK(five.factors()[1].exponent == 1);
  CHECK(factor_element(g, {0, 1}).is_unit());
  CHECK(kind_of([] { factor_element(make_field(-5), {1, 1}); }) == ErrorKind::kNotClassNumberOne);
}

TEST_CASE("factorizations rebuild the element up to a unit") {
  for (auto d : kClassNumberOneFields) {
    const FieldSpec f = make_field(d);
    const QuadRing r(f);
    for (QuadInt x : enumerate_elements(f, 400, false)) {
      const IdealVector v = factor_element(f, x);
      REQUIRE(v.norm() == static_cast<std::uint64_t>(r.norm(x)));
      QuadInt y{1, 0};
      for (const auto& fac : v.factors()) {
        const QuadInt pi = prime_element(f, fac.tag);
        REQUIRE(static_cast<std::uint64_t>(r.norm(pi)) == fac.tag.norm);
        for (int i = 0; i < fac.exponent; ++i) y = r.mul(y, pi);
      }
      const auto u = r.divide(x, y);
      REQUIRE(u.has_value());
      REQUIRE(r.is_unit(*u));
    }
  }
}

TEST_CASE("generator roots modulo p") {
  for (std::int64_t d : {-1, -2, -3, -5, -7, -163}) {
    const FieldSpec f = make_field(d);
    for (auto p : oracle::primes_up_to(200)) {
      const auto roots = omega_roots_mod(f, p);
      REQUIRE(static_cast<int>(roots.size()) == oracle::generator_roots_mod(d, p));
      REQUIRE(std::is_sorted(roots.begin(), roots.end()));
    }
  }
}

TEST_CASE("ideal enumeration") {
  const IdealDomain g(make_field(-1));
  const auto ideals = enumerate_ideals(g, 5);
  std::vector<std::uint64_t> norms;
  for (const auto& v : ideals) norms.push_back(v.norm());
  CHECK(norms == std::vector<std::uint64_t>{1, 2, 4, 5, 5});
  CHECK(enumerate_ideals(IdealDomain(make_field(-7)), 1).size() == 1);
  CHECK(enumerate_ideals(IdealDomain(make_field(-7)), 1)[0].is_unit());
  CHECK(enumerate_ideals(IdealDomain::rationals(), 10).size() == 10);
}

TEST_CASE("ideal counts per norm are character divisor sums") {
  for (std::int64_t d : {-1, -5, 2}) {
    const FieldSpec f = make_field(d);
    const IdealDomain dom(f);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (const auto& v : enumerate_ideals(dom, 10000)) ++counts[v.norm()];
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      std::int64_t sum = 0;
      for (std::uint64_t m = 1; m <= n; ++m) {
        if (n % m == 0) sum += oracle::kronecker(f.discriminant, m);
      }
      REQUIRE(counts[n] == static_cast<std::uint64_t>(sum));
      REQUIRE(dom.ideal_count_with_norm(n) == static_cast<std::uint64_t>(sum));
    }
  }
}

TEST_CASE("the smallest progression of ideals") {
  const IdealDomain g(make_field(-1));
  const PrimeIdealTag t = g.primes_above(2)[0];
  const std::vector<IdealVector> items = {IdealVector(), IdealVector({{t, 1}}), IdealVector({{t, 2}})};
  const auto triples = find_gp_triples(items);
  REQUIRE(triples.size() == 1);
  CHECK(triples[0].first.is_unit());
  CHECK(triples[0].middle == IdealVector({{t, 1}}));
  CHECK(IdealVector({{t, 2}}).to_string() == "2^2");
  CHECK(IdealVector().to_string() == "1");
}

TEST_CASE("progression detection agrees with a pair scan") {
  for (std::int64_t d : {-1, -5, -7}) {
    const auto ideals = enumerate_ideals(IdealDomain(make_field(d)), 60);
    std::vector<std::map<std::uint64_t, int>> maps;
    for (const auto& v : ideals) maps.push_back(as_map(v));
    CHECK(find_gp_triples(ideals).size() == oracle::count_triples_pairscan(maps));
  }
}

TEST_CASE("greedy ideal sets contain no progression") {
  const IdealGreedySet set = greedy_set(IdealDomain(make_field(-5)), 2000);
  CHECK(find_gp_triples(set.included_ideals()).empty());
  CHECK(check_ideal_characterization(set).matches());
}

TEST_CASE("greedy integers match the classical set") {
  const IdealGreedySet set = greedy_set(IdealDomain::rationals(), 100);
  const auto oracle_kept = oracle::greedy_integers(100);
  std::vector<std::uint64_t> excluded;
  for (std::size_t i = 0; i < set.ideals.size(); ++i) {
    REQUIRE(set.included[i] == oracle_kept[set.ideals[i].norm()]);
    if (!set.included[i]) excluded.push_back(set.ideals[i].norm());
  }
  std::sort(excluded.begin(), excluded.end());
  // 2^4 and 3^3 have exponents in A3*
  CHECK(std::find(excluded.begin(), excluded.end(), 27) == excluded.end());
  CHECK(std::find(excluded.begin(), excluded.end(), 16) == excluded.end());
  const std::vector<std::uint64_t> head = {4, 9, 12, 18, 20, 25, 28, 32, 36, 44};
  CHECK(std::equal(head.begin(), head.end(), excluded.begin()));
  for (std::uint64_t n = 1; n <= 100; ++n) REQUIRE(oracle_kept[n] == has_a3_exponents(n));
}

TEST_CASE("greedy element sets match the exponent characterization") {
  for (auto d : kClassNumberOneFields) {
    const ElementGreedySet set = greedy_set(make_field(d), 1000, GreedyMode::kFieldRatio);
    INFO("d = " << d);
    REQUIRE(check_field_ratio_characterization(set).matches());
  }
}

TEST_CASE("greedy element sets agree with the slow oracle") {
  for (std::int64_t d : {-1, -2, -3, -7}) {
    const ElementGreedySet set = greedy_set(make_field(d), 300, GreedyMode::kFieldRatio);
    INFO("d = " << d);
    REQUIRE(as_oracle(set.excluded_elements()) == oracle::greedy_elements_excluded(d, 300));
  }
}

TEST_CASE("rational-ratio exclusions are contents outside G3*") {
  const FieldSpec g = make_field(-1);
  const ElementGreedySet set = greedy_set(g, 100, GreedyMode::kRationalRatio);
  std::set<oracle::Elt> expected;
  const auto kept = oracle::greedy_integers(100);
  for (std::int64_t k = 1; k <= 10; ++k) {
    if (kept[static_cast<std::size_t>(k)]) continue;
    for (std::int64_t c = -10; c <= 10; ++c) {
      for (std::int64_t e = -10; e <= 10; ++e) {
        if (std::gcd(c, e) != 1) continue;
        if (k * k * (c * c + e * e) <= 100) expected.insert({k * c, k * e});
      }
    }
  }
  CHECK(as_oracle(set.excluded_elements()) == expected);
  CHECK(check_rational_ratio_characterization(set).matches());
}

TEST_CASE("associates share inclusion status") {
  for (std::int64_t d : {-1, -3}) {
    const FieldSpec f = make_field(d);
    const QuadRing r(f);
    const ElementGreedySet set = greedy_set(f, 1000, GreedyMode::kFieldRatio);
    std::map<QuadInt, bool> status;
    for (std::size_t i = 0; i < set.elements.size(); ++i) status[set.elements[i]] = set.included[i];
    for (const auto& [x, in] : status) {
      for (auto y : r.associates(x)) REQUIRE(status.at(y) == in);
    }
  }
}

TEST_CASE("inclusion depends only on norms and exponents") {
  const FieldSpec f = make_field(-1);
  const ElementGreedySet set = greedy_set(f, 1000, GreedyMode::kFieldRatio);
  std::map<std::multiset<std::pair<std::uint64_t, int>>, bool> seen;
  for (std::size_t i = 0; i < set.elements.size(); ++i) {
    std::multiset<std::pair<std::uint64_t, int>> key;
    for (const auto& fac : factor_element(f, set.elements[i]).factors()) key.insert({fac.tag.norm, fac.exponent});
    auto [it, fresh] = seen.emplace(key, set.included[i]);
    if (!fresh) REQUIRE(it->second == set.included[i]);
  }
}

TEST_CASE("tie order does not change the greedy set") {
  const FieldSpec f = make_field(-1);
  const auto base = greedy_set(f, 500, GreedyMode::kFieldRatio).included_elements();
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GreedyOptions o;
    o.tie_shuffle_seed = seed;
    REQUIRE(greedy_set(f, 500, GreedyMode::kFieldRatio, o).included_elements() == base);
  }
  const auto ideals = greedy_set(IdealDomain(make_field(-5)), 500).included_ideals();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    REQUIRE(greedy_set(IdealDomain(make_field(-5)), 500, {seed}).included_ideals() == ideals);
  }
}

TEST_CASE("empirical densities") {
  const ElementGreedySet set = greedy_set(make_field(-1), 10000, GreedyMode::kFieldRatio);
  CHECK(std::fabs(to_double(empirical_density(set)) - 0.762340) < 0.03);
  CHECK(empirical_density(7, 7) == Rational(1));
  CHECK(empirical_density(0, 7) == Rational(0));
}

TEST_CASE("element modes need a class-number-one field") {
  CHECK(kind_of([] { greedy_set(make_field(-5), 10, GreedyMode::kFieldRatio); }) == ErrorKind::kNotClassNumberOne);
  CHECK(kind_of([] { greedy_set(make_field(-1), 10, GreedyMode::kIdealRatio); }) == ErrorKind::kDomainError);
}

TEST_CASE("greedy set CSV dumps") {
  std::ostringstream a;
  write_greedy_csv(a, greedy_set(make_field(-1), 2, GreedyMode::kFieldRatio));
  CHECK(a.str().rfind("norm,a,b,included\n1,", 0) == 0);
  std::ostringstream b;
  write_greedy_csv(b, greedy_set(IdealDomain(make_field(-1)), 5));
  CHECK(b.str() == "norm,factorization,included\n1,1,1\n2,2^1,1\n4,2^2,0\n5,5^1_0,1\n5,5^1_1,1\n");
}
