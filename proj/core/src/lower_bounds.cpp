#include "gpfree/lower_bounds.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "gpfree/arith.hpp"
#include "gpfree/errors.hpp"
#include "gpfree/lattice.hpp"

namespace gpfree {

namespace {

struct PresetRow {
  std::int64_t d;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> intervals;
};

const std::vector<PresetRow>& preset_rows() {
  static const std::vector<PresetRow> rows = {
      {-1, {{6728, 6656}, {3712, 3364}, {3328, 928}, {841, 832}, {32, 8}, {4, 1}}},
      {-2, {{19008, 16896}, {8448, 2212}, {48, 36}, {32, 27}, {24, 12}, {9, 8}, {4, 1}}},
      {-3, {{252, 63}, {49, 36}, {9, 1}}},
      {-7, {{29696, 7424}, {3712, 928}, {32, 8}, {4, 1}}},
      {-11, {{405, 45}, {9, 1}}},
      {-19, {{2816, 176}, {16, 1}}},
      {-43, {{1472, 1377}, {576, 208}, {81, 64}, {16, 1}}},
      {-67, {{1024, 729}, {576, 144}, {81, 64}, {16, 1}}},
      {-163, {{2304, 2025}, {1600, 1296}, {1024, 729}, {576, 144}, {81, 64}, {16, 1}}},
  };
  return rows;
}

constexpr std::array<std::int64_t, 9> kPresetFields = {-1, -2, -3, -7, -11, -19, -43, -67, -163};

struct Range {
  Rational lo;  // open
  Rational hi;  // closed
  bool empty() const { return !(lo < hi); }
};

Range intersect(const Range& x, const Range& y) { return {std::max(x.lo, y.lo), std::min(x.hi, y.hi)}; }

}  // namespace

std::uint64_t IntervalSystem::a_max() const {
  std::uint64_t m = 0;
  for (const auto& iv : intervals) m = std::max(m, iv.a);
  return m;
}

bool IntervalSystem::contains(const Rational& x) const {
  return std::any_of(intervals.begin(), intervals.end(), [&](const Interval& iv) { return iv.contains(x); });
}

IntervalSystem make_interval_system(const FieldSpec& field, std::vector<std::pair<std::uint64_t, std::uint64_t>> ab) {
  IntervalSystem system;
  system.field = field;
  for (auto [a, b] : ab) {
    if (b == 0 || a <= b) {
      throw Error(ErrorKind::kDomainError,
                  "interval (1/" + std::to_string(a) + ", 1/" + std::to_string(b) + "] needs a > b >= 1");
    }
    system.intervals.push_back({a, b});
  }
  // ascending: larger a first
  std::sort(system.intervals.begin(), system.intervals.end(),
            [](const Interval& x, const Interval& y) { return x.a > y.a; });
  for (std::size_t i = 1; i < system.intervals.size(); ++i) {
    // (1/a0, 1/b0] and (1/a1, 1/b1] are disjoint iff 1/b0 <= 1/a1, i.e. a1 <= b0
    if (system.intervals[i].a > system.intervals[i - 1].b) {
      throw Error(ErrorKind::kDomainError, "intervals overlap: (1/" + std::to_string(system.intervals[i].a) + ", 1/" +
                                               std::to_string(system.intervals[i].b) + "]");
    }
  }
  return system;
}

std::span<const std::int64_t> preset_fields() { return kPresetFields; }

IntervalSystem preset(std::int64_t d) {
  for (const auto& row : preset_rows()) {
    if (row.d == d) return make_interval_system(make_field(d), row.intervals);
  }
  throw Error(ErrorKind::kNoPreset, "no built-in interval system for d = " + std::to_string(d));
}

IntervalSystem parse_interval_system(std::istream& in, const FieldSpec& field) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ab;
  std::vector<std::size_t> line_of;
  std::string line;
  std::size_t number = 0;
  auto fail = [&](std::size_t n, const std::string& why) {
    throw Error(ErrorKind::kParseError, "line " + std::to_string(n) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    std::string second;
    std::string extra;
    if (!(fields >> second)) fail(number, "expected two integers `a b`");
    if (fields >> extra) fail(number, "unexpected token '" + extra + "'");
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    try {
      std::size_t pa = 0;
      std::size_t pb = 0;
      if (first.front() == '-' || second.front() == '-') fail(number, "negative value");
      a = std::stoull(first, &pa);
      b = std::stoull(second, &pb);
      if (pa != first.size() || pb != second.size()) fail(number, "not an integer");
    } catch (const std::invalid_argument&) {
      fail(number, "not an integer");
    } catch (const std::out_of_range&) {
      fail(number, "integer out of range");
    }
    if (b == 0 || a <= b) fail(number, "need a > b >= 1");
    for (std::size_t i = 0; i < ab.size(); ++i) {
      // overlap iff max(1/a, 1/a') < min(1/b, 1/b'), i.e. min(a, a') > max(b, b')
      if (std::min(a, ab[i].first) > std::max(b, ab[i].second)) {
        fail(number, "overlaps the interval on line " + std::to_string(line_of[i]));
      }
    }
    ab.emplace_back(a, b);
    line_of.push_back(number);
  }
  return make_interval_system(field, std::move(ab));
}

IntervalSystem load_interval_system(const std::string& path, const FieldSpec& field) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open " + path);
  return parse_interval_system(in, field);
}

Rational density(const IntervalSystem& system) {
  Rational sum(0);
  for (const auto& iv : system.intervals) sum += iv.hi() - iv.lo();
  return sum;
}

Certificate certify_gp_free(const IntervalSystem& system, std::uint64_t s_max) {
  Certificate cert;
  const std::uint64_t top = s_max == 0 ? system.a_max() : s_max;
  const auto& ivs = system.intervals;
  std::vector<Range> ranges;
  for (const auto& iv : ivs) ranges.push_back({iv.lo(), iv.hi()});

  // Largest point of `r` inside the system, with the interval index.
  auto hit = [&](const Range& r) -> std::optional<std::pair<std::size_t, Rational>> {
    for (std::size_t k = ranges.size(); k-- > 0;) {
      const Range both = intersect(r, ranges[k]);
      if (!both.empty()) return std::make_pair(k, both.hi);
    }
    return std::nullopt;
  };

  for (std::uint64_t s = 2; s <= top; ++s) {
    if (!achievable_norm(system.field, s)) continue;
    const Rational rs(static_cast<std::int64_t>(s));
    const Rational rs2 = rs * rs;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      for (std::size_t j = 0; j < ranges.size(); ++j) {
        ++cert.cases_checked;
        // x in I, s x in J
        const Range xs = intersect(ranges[i], {ranges[j].lo / rs, ranges[j].hi / rs});
        if (!xs.empty()) {
          if (auto h = hit({xs.lo * rs2, xs.hi * rs2})) {
            const Rational x = h->second / rs2;
            cert.status = CertificateStatus::kCounterexample;
            cert.violation = Violation{s, CaseKind::kThirdAbove, i, j, h->first, x, {x, x * rs, x * rs2}};
            return cert;
          }
          if (auto h = hit({xs.lo / rs, xs.hi / rs})) {
            const Rational x = h->second * rs;
            cert.status = CertificateStatus::kCounterexample;
            cert.violation = Violation{s, CaseKind::kThirdBelow, i, j, h->first, x, {x / rs, x, x * rs}};
            return cert;
          }
        }
        // x in I, s^2 x in J
        const Range xs2 = intersect(ranges[i], {ranges[j].lo / rs2, ranges[j].hi / rs2});
        if (!xs2.empty()) {
          if (auto h = hit({xs2.lo * rs, xs2.hi * rs})) {
            const Rational x = h->second / rs;
            cert.status = CertificateStatus::kCounterexample;
            cert.violation = Violation{s, CaseKind::kMiddle, i, j, h->first, x, {x, x * rs, x * rs2}};
            return cert;
          }
        }
      }
    }
  }
  return cert;
}

bool violation_holds(const IntervalSystem& system, const Violation& v) {
  if (v.s < 2 || !achievable_norm(system.field, v.s)) return false;
  const Rational rs(static_cast<std::int64_t>(v.s));
  if (v.terms[1] != v.terms[0] * rs || v.terms[2] != v.terms[1] * rs) return false;
  return std::all_of(v.terms.begin(), v.terms.end(), [&](const Rational& t) { return system.contains(t); });
}

Chaining chaining_constant(const IntervalSystem& system) {
  Chaining out;
  out.c = system.a_max();
  if (system.intervals.empty()) return out;
  const Rational c(static_cast<std::int64_t>(out.c));
  bool ok = system.intervals.back().b == 1;
  for (std::int64_t m : {2, 3, 7, 1000}) {
    const Rational mk(m);
    const Rational next = c * mk * mk;
    // bottom of the next scale over the top of this one equals M_k
    ok = ok && (next / c) / mk == mk;
    // the two scales do not overlap
    ok = ok && next * system.intervals.front().lo() > mk;
  }
  out.verified = ok;
  return out;
}

EmpiricalDensity empirical_upper_density(const IntervalSystem& system, std::uint64_t m, bool check_triples) {
  const FieldSpec& field = system.field;
  if (!field.is_imaginary || !field.class_number_one) {
    throw Error(ErrorKind::kNotClassNumberOne, "finite checks need a class-number-one imaginary field");
  }
  if (m == 0) throw Error(ErrorKind::kDomainError, "M must be positive");
  // Elements of norm n number |units| times the ideals of norm n, so ideal
  // counts give the same proportion. Ideal counts by a character sieve.
  std::vector<std::int64_t> count(m + 1, 0);
  for (std::uint64_t k = 1; k <= m; ++k) {
    const int chi = kronecker(field.discriminant, k);
    if (chi == 0) continue;
    for (std::uint64_t n = k; n <= m; n += k) count[n] += chi;
  }
  auto in_system = [&](std::uint64_t n) {
    return std::any_of(system.intervals.begin(), system.intervals.end(),
                       [&](const Interval& iv) { return n * iv.a > m && n * iv.b <= m; });
  };
  std::int64_t total = 0;
  std::int64_t inside = 0;
  for (std::uint64_t n = 1; n <= m; ++n) {
    total += count[n];
    if (in_system(n)) inside += count[n];
  }
  EmpiricalDensity out;
  out.m = m;
  out.proportion = Rational(inside, total);
  if (check_triples) {
    std::vector<IdealVector> members;
    for (auto& ideal : enumerate_ideals(IdealDomain(field), m)) {
      if (in_system(ideal.norm())) members.push_back(std::move(ideal));
    }
    out.triples = find_gp_triples(members).size();
  }
  return out;
}

}  // namespace gpfree
