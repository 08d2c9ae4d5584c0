#include "gpfree/euler.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "gpfree/arith.hpp"
#include "gpfree/errors.hpp"

namespace gpfree {

namespace {

constexpr long double kRosserSchoenfeld = 1.25506L;

// Terms below this are far under long double resolution of any partial sum.
constexpr long double kNegligible = 1e-40L;

void require_trunc_prime(std::uint64_t P) {
  if (P < 100) throw Error(ErrorKind::kDomainError, "truncation prime bound must be >= 100");
}

struct FactorTable {
  std::shared_ptr<const std::vector<std::uint32_t>> primes;
  std::size_t count = 0;
  std::vector<long double> log_fp;
  std::vector<long double> log_fp2;
};

std::shared_ptr<const FactorTable> factor_table(std::uint64_t P) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::shared_ptr<const FactorTable>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(P); it != cache.end()) return it->second;
  auto table = std::make_shared<FactorTable>();
  table->primes = prime_table(P);
  const auto& primes = *table->primes;
  table->count = static_cast<std::size_t>(std::upper_bound(primes.begin(), primes.end(), P) - primes.begin());
  table->log_fp.resize(table->count);
  table->log_fp2.resize(table->count);
  for (std::size_t i = 0; i < table->count; ++i) {
    const long double p = primes[i];
    table->log_fp[i] = log_f(p);
    table->log_fp2[i] = log_f(p * p);
  }
  cache.emplace(P, table);
  return table;
}

void ensure_tail_constant() {
  static std::once_flag once;
  std::call_once(once, [] {
    if (log_f_tail_constant_check() >= 1.0L) {
      throw Error(ErrorKind::kConsistencyError, "|log f(y)| <= 1/y^2 failed on [2, 100]");
    }
  });
}

long double tail_log_bound(FactorKind worst, std::uint64_t P) {
  // |log f(y)| <= 2 / y^2 for y >= 2.
  switch (worst) {
    case FactorKind::kFP: return 2 * prime_tail_sum(2, P);
    case FactorKind::kFPSq: return 4 * prime_tail_sum(2, P);
    case FactorKind::kFP2: return 2 * prime_tail_sum(4, P);
  }
  return 4 * prime_tail_sum(2, P);
}

}  // namespace

bool a3_contains(std::uint64_t i) noexcept {
  while (i > 0) {
    if (i % 3 == 2) return false;
    i /= 3;
  }
  return true;
}

long double log_f(long double x) {
  if (!(x > 1)) throw Error(ErrorKind::kDomainError, "f(x) requires x > 1");
  long double sum = std::log1p(-1 / x);
  long double term = 1 / x;
  while (term > kNegligible) {
    sum += std::log1p(term);
    term = term * term * term;
  }
  return sum;
}

ApproxValue f_factor(long double x, long double tol) {
  if (!(x > 1)) throw Error(ErrorKind::kDomainError, "f(x) requires x > 1");
  if (!(tol > 0)) throw Error(ErrorKind::kDomainError, "tolerance must be positive");
  long double value = 1 - 1 / x;
  long double term = 1 / x;
  while (term >= tol / 4) {
    value *= 1 + term;
    term = term * term * term;
  }
  // Remaining factors multiply to at most exp(term + term^3 + ...) <= exp(term / (1 - term)).
  const long double remaining = term / (1 - term);
  return {value, value * std::expm1(2 * remaining) + 16 * LDBL_EPSILON * value};
}

long double log_f_tail_constant_check() {
  long double worst = 0;
  for (int k = 0; k <= 98000; ++k) {
    const long double y = 2.0L + k * 0.001L;
    worst = std::max(worst, y * y * std::fabs(log_f(y)));
  }
  return worst;
}

long double prime_tail_sum(int s, std::uint64_t P) {
  if (s < 2 || P < 2) throw Error(ErrorKind::kDomainError, "prime_tail_sum requires s >= 2, P >= 2");
  const long double Pl = static_cast<long double>(P);
  return s * kRosserSchoenfeld * std::pow(Pl, 1.0L - s) / ((s - 1) * std::log(Pl));
}

FactorKind factor_kind(SplitKind kind) noexcept {
  switch (kind) {
    case SplitKind::kRamified: return FactorKind::kFP;
    case SplitKind::kInert: return FactorKind::kFP2;
    case SplitKind::kSplit: return FactorKind::kFPSq;
  }
  return FactorKind::kFP;
}

CharacterTable make_character_table(const FieldSpec& field, std::uint64_t P) {
  require_trunc_prime(P);
  CharacterTable table;
  table.field = field;
  table.trunc_prime = P;
  table.primes = prime_table(P);
  const auto& primes = *table.primes;
  table.count = static_cast<std::size_t>(std::upper_bound(primes.begin(), primes.end(), P) - primes.begin());
  table.chi.resize(table.count);
  for (std::size_t i = 0; i < table.count; ++i) {
    table.chi[i] = static_cast<std::int8_t>(kronecker(field.discriminant, primes[i]));
  }
  return table;
}

namespace {

template <class KindAt>
ApproxValue product_over_factor_table(std::uint64_t P, FactorKind worst, KindAt&& kind_at) {
  require_trunc_prime(P);
  ensure_tail_constant();
  const auto table = factor_table(P);
  const auto& primes = *table->primes;
  long double sum = 0;
  long double magnitude = 0;
  for (std::size_t i = 0; i < table->count; ++i) {
    long double term = 0;
    switch (kind_at(i, primes[i])) {
      case FactorKind::kFP: term = table->log_fp[i]; break;
      case FactorKind::kFP2: term = table->log_fp2[i]; break;
      case FactorKind::kFPSq: term = 2 * table->log_fp[i]; break;
    }
    sum += term;
    magnitude += std::fabs(term);
  }
  const long double rounding = 16 * LDBL_EPSILON * magnitude + table->count * LDBL_EPSILON * std::fabs(sum);
  return exp_enclosure(sum, tail_log_bound(worst, P) + rounding);
}

}  // namespace

ApproxValue splitting_product(std::uint64_t P, const std::function<FactorKind(std::uint64_t)>& kind_of,
                              FactorKind worst) {
  return product_over_factor_table(P, worst, [&](std::size_t, std::uint64_t p) { return kind_of(p); });
}

ApproxValue euler_product_by_splitting(const CharacterTable& table) {
  // Both tables enumerate the primes in order from 2, so indices line up.
  return product_over_factor_table(table.trunc_prime, FactorKind::kFPSq, [&](std::size_t i, std::uint64_t) {
    const int c = table.chi[i];
    return c == 0 ? FactorKind::kFP : (c == 1 ? FactorKind::kFPSq : FactorKind::kFP2);
  });
}

ApproxValue euler_product_by_splitting(const FieldSpec& field, std::uint64_t P) {
  return euler_product_by_splitting(make_character_table(field, P));
}

ApproxValue riemann_zeta_int(int s, long double tol) {
  if (s < 2) throw Error(ErrorKind::kDomainError, "riemann_zeta_int requires s >= 2");
  if (!(tol > 0)) throw Error(ErrorKind::kDomainError, "tolerance must be positive");

  static std::mutex mutex;
  static std::map<std::pair<int, long double>, ApproxValue> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({s, tol}); it != memo.end()) return it->second;
  }

  // Euler-Maclaurin from N on, through the B2 term; the remainder is at
  // most the B4 term s(s+1)(s+2) N^(-s-3) / 720 in size.
  const long double sl = s;
  const long double c4 = sl * (sl + 1) * (sl + 2) / 720;
  const long double n_goal = std::ceil(std::pow(c4 / tol, 1.0L / (sl + 3)));
  const std::uint64_t N = static_cast<std::uint64_t>(std::clamp(n_goal, 16.0L, 1.0e6L));
  long double partial = 0;
  for (std::uint64_t n = N - 1; n >= 1; --n) partial += std::pow(static_cast<long double>(n), -sl);
  const long double Nl = static_cast<long double>(N);
  const long double tail = std::pow(Nl, 1 - sl) / (sl - 1) + std::pow(Nl, -sl) / 2 + sl * std::pow(Nl, -sl - 1) / 12;
  const long double value = partial + tail;
  const long double err = c4 * std::pow(Nl, -sl - 3) + 4 * N * LDBL_EPSILON * value;

  ApproxValue result{value, err};
  std::lock_guard lock(mutex);
  memo.emplace(std::pair{s, tol}, result);
  return result;
}

ApproxValue dirichlet_L(const CharacterTable& table, int s) {
  if (s < 2) throw Error(ErrorKind::kDomainError, "dirichlet_L requires s >= 2");
  const auto& primes = *table.primes;
  long double sum = 0;
  std::uint64_t last = 2;
  std::size_t used = 0;
  for (std::size_t i = 0; i < table.count; ++i) {
    const long double x = std::pow(static_cast<long double>(primes[i]), static_cast<long double>(-s));
    if (x < kNegligible) break;
    sum -= std::log1p(-table.chi[i] * x);
    last = primes[i];
    ++used;
  }
  // |log (1 - chi x)^-1| <= 2x for x <= 1/2.
  const long double tail = 2 * prime_tail_sum(s, last);
  return exp_enclosure(sum, tail + 8 * (used + 1) * LDBL_EPSILON * (1 + std::fabs(sum)));
}

ApproxValue dirichlet_L(const FieldSpec& field, int s, std::uint64_t P) {
  return dirichlet_L(make_character_table(field, P), s);
}

ApproxValue dedekind_zeta_prime_ideals(const CharacterTable& table, int s) {
  if (s < 2) throw Error(ErrorKind::kDomainError, "dedekind_zeta requires s >= 2");
  const auto& primes = *table.primes;
  long double sum = 0;
  std::uint64_t last = 2;
  std::size_t used = 0;
  for (std::size_t i = 0; i < table.count; ++i) {
    const long double x = std::pow(static_cast<long double>(primes[i]), static_cast<long double>(-s));
    if (x < kNegligible) break;
    switch (table.chi[i]) {
      case 1: sum -= 2 * std::log1p(-x); break;
      case -1: sum -= std::log1p(-x * x); break;
      default: sum -= std::log1p(-x); break;
    }
    last = primes[i];
    ++used;
  }
  // At most two prime ideals above p, each of norm >= p.
  const long double tail = 4 * prime_tail_sum(s, last);
  return exp_enclosure(sum, tail + 8 * (used + 1) * LDBL_EPSILON * (1 + std::fabs(sum)));
}

ApproxValue dedekind_zeta(const CharacterTable& table, int s) {
  const ApproxValue via_l = riemann_zeta_int(s) * dirichlet_L(table, s);
  const ApproxValue via_ideals = dedekind_zeta_prime_ideals(table, s);
  if (!via_l.overlaps(via_ideals)) {
    throw Error(ErrorKind::kConsistencyError,
                "zeta_K(" + std::to_string(s) + ") routes disagree for d = " + std::to_string(table.field.d));
  }
  return via_l;
}

ApproxValue dedekind_zeta(const FieldSpec& field, int s, std::uint64_t P) {
  return dedekind_zeta(make_character_table(field, P), s);
}

}  // namespace gpfree
