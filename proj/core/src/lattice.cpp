#include "gpfree/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "gpfree/arith.hpp"
#include "gpfree/errors.hpp"
#include "gpfree/euler.hpp"

namespace gpfree {

namespace {

std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

int valuation(std::int64_t v, std::uint64_t p) {
  if (v == 0) return 1 << 20;
  int e = 0;
  auto m = static_cast<std::uint64_t>(v < 0 ? -v : v);
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

std::uint64_t pack(QuadInt x) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x.a)) << 32) |
         static_cast<std::uint32_t>(x.b);
}

void require_imaginary(const FieldSpec& field) {
  if (!field.is_imaginary) {
    throw Error(ErrorKind::kNotImaginary, "d = " + std::to_string(field.d) + " is not imaginary");
  }
}

void require_class_number_one(const FieldSpec& field) {
  if (!field.class_number_one) {
    throw Error(ErrorKind::kNotClassNumberOne,
                "element factorization needs class number one, got d = " + std::to_string(field.d));
  }
}

// Calls visit(a, b, norm) for every nonzero element with norm <= bound.
template <class Visit>
void for_each_element(const FieldSpec& field, std::uint64_t bound, Visit&& visit) {
  require_imaginary(field);
  const QuadRing ring(field);
  const auto B = static_cast<std::int64_t>(bound);
  const std::int64_t ad = -field.d;
  if (!ring.half_integral_basis()) {
    const std::int64_t bmax = isqrt(B / ad);
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      const std::int64_t amax = isqrt(B - ad * b * b);
      for (std::int64_t a = -amax; a <= amax; ++a) {
        if (a == 0 && b == 0) continue;
        visit(a, b, a * a + ad * b * b);
      }
    }
    return;
  }
  const std::int64_t c = (1 + ad) / 4;
  const std::int64_t bmax = isqrt(4 * B / ad);
  for (std::int64_t b = -bmax; b <= bmax; ++b) {
    // (a + b/2)^2 <= B - ad b^2 / 4
    const long double rad = std::sqrt(std::max(0.0L, static_cast<long double>(B) - ad * b * b / 4.0L));
    const auto lo = static_cast<std::int64_t>(std::floor(-b / 2.0L - rad)) - 1;
    const auto hi = static_cast<std::int64_t>(std::ceil(-b / 2.0L + rad)) + 1;
    for (std::int64_t a = lo; a <= hi; ++a) {
      if (a == 0 && b == 0) continue;
      const std::int64_t n = a * a + a * b + c * b * b;
      if (n <= B) visit(a, b, n);
    }
  }
}

// The divisors m of n with n | m^2 and m < n: norms of a middle term z when
// x is the last term of a progression with non-unit ratio.
std::vector<std::uint64_t> middle_norms(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::uint64_t> next;
    for (auto m : out) {
      std::uint64_t pk = 1;
      for (int f = 0; f <= e; ++f, pk *= p) {
        if (2 * f >= e) next.push_back(m * pk);
      }
    }
    out = std::move(next);
  }
  std::erase(out, n);
  return out;
}

template <class T, class NormOf>
void shuffle_ties(std::vector<T>& items, std::uint64_t seed, NormOf&& norm_of) {
  std::mt19937_64 rng(seed);
  auto first = items.begin();
  while (first != items.end()) {
    auto last = first;
    const auto n = norm_of(*first);
    while (last != items.end() && norm_of(*last) == n) ++last;
    std::shuffle(first, last, rng);
    first = last;
  }
}

// Odometer over all w with 0 <= 2w <= x componentwise, w != 0.
template <class Visit>
void for_each_half_step(const IdealVector& x, Visit&& visit) {
  const auto fx = x.factors();
  std::vector<int> w(fx.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < w.size() && w[i] == fx[i].exponent / 2) {
      w[i] = 0;
      ++i;
    }
    if (i == w.size()) return;
    ++w[i];
    std::vector<IdealFactor> step;
    step.reserve(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] > 0) step.push_back({fx[j].tag, w[j]});
    }
    visit(IdealVector(std::move(step)));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// QuadRing

QuadRing::QuadRing(const FieldSpec& field) : field_(field) {
  half_ = ((field.d % 4) + 4) % 4 == 1;
  c_ = half_ ? (field.d - 1) / 4 : 0;
  if (field.is_imaginary) {
    // Units have |a|, |b| <= 2 in every imaginary field.
    for (std::int64_t a = -2; a <= 2; ++a) {
      for (std::int64_t b = -2; b <= 2; ++b) {
        if (norm({a, b}) == 1) units_.push_back({a, b});
      }
    }
  }
}

std::int64_t QuadRing::norm(QuadInt x) const noexcept {
  if (half_) return x.a * x.a + x.a * x.b - c_ * x.b * x.b;
  return x.a * x.a - field_.d * x.b * x.b;
}

QuadInt QuadRing::mul(QuadInt x, QuadInt y) const noexcept {
  if (half_) return {x.a * y.a + c_ * x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  return {x.a * y.a + field_.d * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadInt QuadRing::conj(QuadInt x) const noexcept {
  if (half_) return {x.a + x.b, -x.b};
  return {x.a, -x.b};
}

std::optional<QuadInt> QuadRing::divide(QuadInt x, QuadInt y) const {
  const std::int64_t n = norm(y);
  if (n == 0) throw Error(ErrorKind::kDomainError, "division by zero");
  const QuadInt t = mul(x, conj(y));
  if (t.a % n != 0 || t.b % n != 0) return std::nullopt;
  return QuadInt{t.a / n, t.b / n};
}

const std::vector<QuadInt>& QuadRing::units() const {
  require_imaginary(field_);
  return units_;
}

std::vector<QuadInt> QuadRing::associates(QuadInt x) const {
  std::vector<QuadInt> out;
  for (const auto& u : units()) out.push_back(mul(x, u));
  std::sort(out.begin(), out.end());
  return out;
}

QuadInt QuadRing::canonical_associate(QuadInt x) const {
  QuadInt best = x;
  for (const auto& u : units()) best = std::max(best, mul(x, u));
  return best;
}

// ---------------------------------------------------------------------------
// Prime ideals

std::vector<std::uint64_t> omega_roots_mod(const FieldSpec& field, std::uint64_t p) {
  const bool half = ((field.d % 4) + 4) % 4 == 1;
  const auto P = static_cast<std::int64_t>(p);
  const std::int64_t c = half ? (field.d - 1) / 4 : 0;
  std::vector<std::uint64_t> roots;
  if (p == 2) {
    for (std::int64_t t = 0; t < 2; ++t) {
      const std::int64_t g = half ? t * t - t - c : t * t - field.d;
      if (((g % 2) + 2) % 2 == 0) roots.push_back(static_cast<std::uint64_t>(t));
    }
    return roots;
  }
  const auto dm = static_cast<std::uint64_t>(((field.d % P) + P) % P);
  if (dm != 0 && pow_mod(dm, (p - 1) / 2, p) != 1) return roots;
  const std::uint64_t s = sqrt_mod(dm, p);
  if (!half) {
    roots = {s, (p - s) % p};
  } else {
    const std::uint64_t inv2 = (p + 1) / 2;
    roots = {mul_mod((1 + s) % p, inv2, p), mul_mod((1 + p - s) % p, inv2, p)};
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

IdealDomain IdealDomain::rationals() { return IdealDomain(); }

IdealDomain::IdealDomain(const FieldSpec& field) : field_(field) {}

const FieldSpec& IdealDomain::field() const {
  if (!field_) throw Error(ErrorKind::kDomainError, "the rationals have no quadratic field");
  return *field_;
}

std::vector<PrimeIdealTag> IdealDomain::primes_above(std::uint64_t p) const {
  if (!is_prime(p)) throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
  if (!field_) return {{p, 0, SplitKind::kRamified, p}};
  const SplitType st = split_type(*field_, p);
  switch (st.kind) {
    case SplitKind::kInert: return {{p, 0, SplitKind::kInert, p * p}};
    case SplitKind::kRamified: return {{p, 0, SplitKind::kRamified, p}};
    case SplitKind::kSplit: return {{p, 0, SplitKind::kSplit, p}, {p, 1, SplitKind::kSplit, p}};
  }
  return {};
}

std::vector<PrimeIdealTag> IdealDomain::prime_ideals_up_to(std::uint64_t bound) const {
  std::vector<PrimeIdealTag> tags;
  if (bound < 2) return tags;
  const auto primes = prime_table(bound);
  for (std::uint64_t p : *primes) {
    if (p > bound) break;
    for (const auto& tag : primes_above(p)) {
      if (tag.norm <= bound) tags.push_back(tag);
    }
  }
  std::sort(tags.begin(), tags.end(), [](const PrimeIdealTag& x, const PrimeIdealTag& y) {
    return std::tie(x.norm, x.p, x.conjugate) < std::tie(y.norm, y.p, y.conjugate);
  });
  return tags;
}

std::uint64_t IdealDomain::ideal_count_with_norm(std::uint64_t n) const {
  if (!field_) return 1;
  std::int64_t total = 0;
  for (std::uint64_t m = 1; m * m <= n; ++m) {
    if (n % m != 0) continue;
    total += kronecker(field_->discriminant, m);
    if (m * m != n) total += kronecker(field_->discriminant, n / m);
  }
  return static_cast<std::uint64_t>(total);
}

// ---------------------------------------------------------------------------
// IdealVector

IdealVector::IdealVector(std::vector<IdealFactor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& f : factors) {
    if (!factors_.empty() && factors_.back().tag == f.tag) {
      factors_.back().exponent += f.exponent;
    } else {
      factors_.push_back(f);
    }
  }
  std::erase_if(factors_, [](const IdealFactor& f) { return f.exponent == 0; });
  for (const auto& f : factors_) {
    if (f.exponent < 0) throw Error(ErrorKind::kDomainError, "negative exponent in an integral ideal");
  }
}

std::uint64_t IdealVector::norm() const noexcept {
  std::uint64_t n = 1;
  for (const auto& f : factors_) {
    for (int i = 0; i < f.exponent; ++i) n *= f.tag.norm;
  }
  return n;
}

int IdealVector::exponent(const PrimeIdealTag& tag) const noexcept {
  for (const auto& f : factors_) {
    if (f.tag == tag) return f.exponent;
  }
  return 0;
}

bool IdealVector::divides(const IdealVector& other) const noexcept {
  for (const auto& f : factors_) {
    if (other.exponent(f.tag) < f.exponent) return false;
  }
  return true;
}

IdealVector operator+(const IdealVector& x, const IdealVector& y) {
  std::vector<IdealFactor> all(x.factors_.begin(), x.factors_.end());
  all.insert(all.end(), y.factors_.begin(), y.factors_.end());
  return IdealVector(std::move(all));
}

IdealVector operator-(const IdealVector& x, const IdealVector& y) {
  std::vector<IdealFactor> all(x.factors_.begin(), x.factors_.end());
  for (const auto& f : y.factors_) all.push_back({f.tag, -f.exponent});
  return IdealVector(std::move(all));
}

IdealVector IdealVector::scaled(int k) const {
  std::vector<IdealFactor> out(factors_.begin(), factors_.end());
  for (auto& f : out) f.exponent *= k;
  return IdealVector(std::move(out));
}

std::string IdealVector::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += '*';
    s += std::to_string(f.tag.p) + '^' + std::to_string(f.exponent);
    if (f.tag.kind == SplitKind::kSplit) s += '_' + std::to_string(f.tag.conjugate);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Enumeration and factorization

std::vector<QuadInt> enumerate_elements(const FieldSpec& field, std::uint64_t bound, bool up_to_associates) {
  struct Entry {
    std::int64_t norm;
    QuadInt x;
  };
  std::vector<Entry> entries;
  std::optional<QuadRing> ring;
  if (up_to_associates) ring.emplace(field);
  for_each_element(field, bound, [&](std::int64_t a, std::int64_t b, std::int64_t n) {
    if (ring && ring->canonical_associate({a, b}) != QuadInt{a, b}) return;
    entries.push_back({n, {a, b}});
  });
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return std::tie(x.norm, x.x) < std::tie(y.norm, y.x); });
  std::vector<QuadInt> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.x);
  return out;
}

std::uint64_t count_elements(const FieldSpec& field, std::uint64_t bound) {
  std::uint64_t count = 0;
  for_each_element(field, bound, [&](std::int64_t, std::int64_t, std::int64_t) { ++count; });
  return count;
}

std::uint64_t count_primitive(std::uint64_t bound) {
  const auto B = static_cast<std::int64_t>(bound);
  const std::int64_t amax = isqrt(B);
  std::uint64_t count = 0;
  for (std::int64_t a = -amax; a <= amax; ++a) {
    const std::int64_t bmax = isqrt(B - a * a);
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      if (std::gcd(a, b) == 1) ++count;
    }
  }
  return count;
}

IdealVector factor_element(const FieldSpec& field, QuadInt x) {
  require_class_number_one(field);
  const QuadRing ring(field);
  const std::int64_t n = ring.norm(x);
  if (n == 0) throw Error(ErrorKind::kDomainError, "cannot factor zero");
  std::vector<IdealFactor> factors;
  for (auto [p, e] : factorize(static_cast<std::uint64_t>(n))) {
    const SplitType st = split_type(field, p);
    if (st.kind == SplitKind::kInert) {
      factors.push_back({{p, 0, SplitKind::kInert, p * p}, e / 2});
    } else if (st.kind == SplitKind::kRamified) {
      factors.push_back({{p, 0, SplitKind::kRamified, p}, e});
    } else {
      // Strip the content p^m; the rest lies in at most one of the two primes.
      const int m = std::min(valuation(x.a, p), valuation(x.b, p));
      std::int64_t pm = 1;
      for (int i = 0; i < m; ++i) pm *= static_cast<std::int64_t>(p);
      const QuadInt rest{x.a / pm, x.b / pm};
      const int extra = e - 2 * m;
      const auto roots = omega_roots_mod(field, p);
      const auto P = static_cast<std::int64_t>(p);
      const std::int64_t r0 = static_cast<std::int64_t>(roots[0]);
      const bool in_first = (((rest.a % P) + (rest.b % P) * r0) % P + P) % P == 0;
      factors.push_back({{p, 0, SplitKind::kSplit, p}, m + (in_first ? extra : 0)});
      factors.push_back({{p, 1, SplitKind::kSplit, p}, m + (in_first ? 0 : extra)});
    }
  }
  return IdealVector(std::move(factors));
}

QuadInt prime_element(const FieldSpec& field, const PrimeIdealTag& tag) {
  require_class_number_one(field);
  if (tag.kind == SplitKind::kInert) return {static_cast<std::int64_t>(tag.p), 0};
  const auto P = static_cast<std::int64_t>(tag.p);
  std::optional<std::int64_t> root;
  if (tag.kind == SplitKind::kSplit) root = static_cast<std::int64_t>(omega_roots_mod(field, tag.p)[tag.conjugate]);
  std::optional<QuadInt> found;
  for_each_element(field, tag.p, [&](std::int64_t a, std::int64_t b, std::int64_t n) {
    if (found || n != P) return;
    if (root && (((a % P) + (b % P) * *root) % P + P) % P != 0) return;
    found = QuadInt{a, b};
  });
  if (!found) throw Error(ErrorKind::kConsistencyError, "no element generates the prime above " + std::to_string(tag.p));
  return *found;
}

std::vector<IdealVector> enumerate_ideals(const IdealDomain& domain, std::uint64_t bound) {
  if (bound == 0) return {};
  const std::vector<PrimeIdealTag> tags = domain.prime_ideals_up_to(bound);
  std::vector<std::pair<std::uint64_t, IdealVector>> out;
  std::vector<IdealFactor> current;
  auto rec = [&](auto&& self, std::size_t start, std::uint64_t norm) -> void {
    out.emplace_back(norm, IdealVector(current));
    for (std::size_t j = start; j < tags.size(); ++j) {
      const std::uint64_t q = tags[j].norm;
      if (norm * q > bound) break;
      std::uint64_t n = norm;
      for (int e = 1; n * q <= bound; ++e) {
        n *= q;
        current.push_back({tags[j], e});
        self(self, j + 1, n);
        current.pop_back();
      }
    }
  };
  rec(rec, 0, 1);
  std::sort(out.begin(), out.end());
  std::vector<IdealVector> ideals;
  ideals.reserve(out.size());
  for (auto& [n, v] : out) ideals.push_back(std::move(v));
  return ideals;
}

std::vector<IdealTriple> find_gp_triples(std::span<const IdealVector> items) {
  std::vector<IdealVector> sorted(items.begin(), items.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto contains = [&](const IdealVector& v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
  std::vector<IdealTriple> triples;
  for (const auto& x : sorted) {
    for_each_half_step(x, [&](const IdealVector& w) {
      IdealVector middle = x - w;
      if (!contains(middle)) return;
      IdealVector first = middle - w;
      if (contains(first)) triples.push_back({std::move(first), std::move(middle), x});
    });
  }
  std::sort(triples.begin(), triples.end());
  return triples;
}

bool has_a3_exponents(const IdealVector& ideal) noexcept {
  for (const auto& f : ideal.factors()) {
    if (!a3_contains(static_cast<std::uint64_t>(f.exponent))) return false;
  }
  return true;
}

bool has_a3_exponents(std::uint64_t n) {
  for (auto [p, e] : factorize(n)) {
    if (!a3_contains(static_cast<std::uint64_t>(e))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Greedy sets

std::size_t ElementGreedySet::included_count() const noexcept {
  return static_cast<std::size_t>(std::count(included.begin(), included.end(), true));
}

std::vector<QuadInt> ElementGreedySet::included_elements() const {
  std::vector<QuadInt> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (included[i]) out.push_back(elements[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuadInt> ElementGreedySet::excluded_elements() const {
  std::vector<QuadInt> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!included[i]) out.push_back(elements[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t IdealGreedySet::included_count() const noexcept {
  return static_cast<std::size_t>(std::count(included.begin(), included.end(), true));
}

std::vector<IdealVector> IdealGreedySet::included_ideals() const {
  std::vector<IdealVector> out;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (included[i]) out.push_back(ideals[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IdealVector> IdealGreedySet::excluded_ideals() const {
  std::vector<IdealVector> out;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (!included[i]) out.push_back(ideals[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementGreedySet greedy_set(const FieldSpec& field, std::uint64_t bound, GreedyMode mode,
                            const GreedyOptions& options) {
  require_imaginary(field);
  require_class_number_one(field);
  if (mode == GreedyMode::kIdealRatio) {
    throw Error(ErrorKind::kDomainError, "ideal-ratio greedy sets are built over IdealDomain");
  }
  const QuadRing ring(field);
  ElementGreedySet set;
  set.field = field;
  set.norm_bound = bound;
  set.mode = mode;
  set.elements = enumerate_elements(field, bound, false);
  if (options.tie_shuffle_seed) {
    shuffle_ties(set.elements, *options.tie_shuffle_seed, [&](QuadInt x) { return ring.norm(x); });
  }
  set.included.assign(set.elements.size(), false);

  std::unordered_set<std::uint64_t> kept;
  std::unordered_map<std::int64_t, std::vector<QuadInt>> kept_by_norm;
  auto is_kept = [&](QuadInt x) { return kept.contains(pack(x)); };

  std::int64_t cached_norm = -1;
  std::vector<std::uint64_t> middles;
  for (std::size_t i = 0; i < set.elements.size(); ++i) {
    const QuadInt x = set.elements[i];
    const std::int64_t n = ring.norm(x);
    bool completes = false;
    if (mode == GreedyMode::kFieldRatio) {
      if (n != cached_norm) {
        middles = middle_norms(static_cast<std::uint64_t>(n));
        cached_norm = n;
      }
      // x = z r and z = y r: r = x / z, y = z / r.
      for (std::uint64_t m : middles) {
        auto it = kept_by_norm.find(static_cast<std::int64_t>(m));
        if (it == kept_by_norm.end()) continue;
        for (const QuadInt& z : it->second) {
          const auto r = ring.divide(x, z);
          if (!r) continue;
          const auto y = ring.divide(z, *r);
          if (y && is_kept(*y)) {
            completes = true;
            break;
          }
        }
        if (completes) break;
      }
    } else {
      const std::int64_t g = std::gcd(x.a, x.b);
      for (std::int64_t k = 2; k * k <= g && !completes; ++k) {
        if (g % (k * k) != 0) continue;
        const QuadInt y{x.a / (k * k), x.b / (k * k)};
        const QuadInt z{x.a / k, x.b / k};
        completes = is_kept(y) && (is_kept(z) || is_kept({-z.a, -z.b}));
      }
    }
    if (!completes) {
      set.included[i] = true;
      kept.insert(pack(x));
      kept_by_norm[n].push_back(x);
    }
  }
  return set;
}

IdealGreedySet greedy_set(const IdealDomain& domain, std::uint64_t bound, const GreedyOptions& options) {
  IdealGreedySet set;
  set.norm_bound = bound;
  set.ideals = enumerate_ideals(domain, bound);
  if (options.tie_shuffle_seed) {
    shuffle_ties(set.ideals, *options.tie_shuffle_seed, [](const IdealVector& v) { return v.norm(); });
  }
  set.included.assign(set.ideals.size(), false);
  std::set<IdealVector> kept;
  for (std::size_t i = 0; i < set.ideals.size(); ++i) {
    const IdealVector& x = set.ideals[i];
    bool completes = false;
    for_each_half_step(x, [&](const IdealVector& w) {
      if (completes) return;
      const IdealVector middle = x - w;
      completes = kept.contains(middle) && kept.contains(middle - w);
    });
    if (!completes) {
      set.included[i] = true;
      kept.insert(x);
    }
  }
  return set;
}

Rational empirical_density(std::size_t included, std::size_t total) {
  if (total == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(included), static_cast<std::int64_t>(total));
}

Rational empirical_density(const ElementGreedySet& set) {
  return empirical_density(set.included_count(), set.elements.size());
}

Rational empirical_density(const IdealGreedySet& set) {
  return empirical_density(set.included_count(), set.ideals.size());
}

CharacterizationReport check_field_ratio_characterization(const ElementGreedySet& set) {
  if (set.mode != GreedyMode::kFieldRatio) throw Error(ErrorKind::kDomainError, "expected a field-ratio greedy set");
  CharacterizationReport r;
  r.items = set.elements.size();
  for (std::size_t i = 0; i < set.elements.size(); ++i) {
    if (has_a3_exponents(factor_element(set.field, set.elements[i])) != set.included[i]) ++r.mismatches;
  }
  return r;
}

CharacterizationReport check_rational_ratio_characterization(const ElementGreedySet& set) {
  if (set.mode != GreedyMode::kRationalRatio) {
    throw Error(ErrorKind::kDomainError, "expected a rational-ratio greedy set");
  }
  CharacterizationReport r;
  r.items = set.elements.size();
  for (std::size_t i = 0; i < set.elements.size(); ++i) {
    const QuadInt x = set.elements[i];
    const auto content = static_cast<std::uint64_t>(std::gcd(x.a, x.b));
    if (has_a3_exponents(content) != set.included[i]) ++r.mismatches;
  }
  return r;
}

CharacterizationReport check_ideal_characterization(const IdealGreedySet& set) {
  CharacterizationReport r;
  r.items = set.ideals.size();
  for (std::size_t i = 0; i < set.ideals.size(); ++i) {
    if (has_a3_exponents(set.ideals[i]) != set.included[i]) ++r.mismatches;
  }
  return r;
}

void write_greedy_csv(std::ostream& out, const ElementGreedySet& set) {
  const QuadRing ring(set.field);
  out << "norm,a,b,included\n";
  for (std::size_t i = 0; i < set.elements.size(); ++i) {
    const QuadInt x = set.elements[i];
    out << ring.norm(x) << ',' << x.a << ',' << x.b << ',' << (set.included[i] ? 1 : 0) << '\n';
  }
}

void write_greedy_csv(std::ostream& out, const IdealGreedySet& set) {
  out << "norm,factorization,included\n";
  for (std::size_t i = 0; i < set.ideals.size(); ++i) {
    out << set.ideals[i].norm() << ',' << set.ideals[i].to_string() << ',' << (set.included[i] ? 1 : 0) << '\n';
  }
}

}  // namespace gpfree
