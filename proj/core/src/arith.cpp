#include "gpfree/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>

#include "gpfree/errors.hpp"

namespace gpfree {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t k = 5; k * k <= n; k += 6) {
    if (n % k == 0 || n % (k + 2) == 0) return false;
  }
  return true;
}

bool is_squarefree(std::int64_t n) noexcept {
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  if (m == 0) return false;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

PrimeFactorization factorize(std::uint64_t n) {
  PrimeFactorization out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (pow_mod(a, (p - 1) / 2, p) != 1) {
    throw Error(ErrorKind::kDomainError, "sqrt_mod: not a quadratic residue");
  }
  std::uint64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  std::uint64_t t = pow_mod(a, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
    r = mul_mod(r, b, p);
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    m = i;
  }
  return std::min(r, p - r);
}

namespace {

std::vector<std::uint32_t> sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  primes.reserve(limit > 100 ? static_cast<std::size_t>(1.3 * limit / std::log(limit)) : 32);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

std::shared_ptr<const std::vector<std::uint32_t>> prime_table(std::uint64_t limit) {
  static std::mutex mutex;
  static std::shared_ptr<const std::vector<std::uint32_t>> cached;
  static std::uint64_t cached_limit = 0;
  std::lock_guard lock(mutex);
  if (!cached || cached_limit < limit) {
    std::uint64_t target = std::max<std::uint64_t>(limit, 1u << 16);
    cached = std::make_shared<const std::vector<std::uint32_t>>(sieve(target));
    cached_limit = target;
  }
  return cached;
}

int jacobi(std::int64_t a_signed, std::uint64_t n) noexcept {
  std::int64_t nn = static_cast<std::int64_t>(n);
  std::uint64_t a = static_cast<std::uint64_t>(((a_signed % nn) + nn) % nn);
  int result = 1;
  while (a != 0) {
    int twos = std::countr_zero(a);
    a >>= twos;
    if ((twos & 1) && (n % 8 == 3 || n % 8 == 5)) result = -result;
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? result : 0;
}

int kronecker(std::int64_t D, std::uint64_t n) noexcept {
  if (n == 1) return 1;
  int result = 1;
  int twos = std::countr_zero(n);
  n >>= twos;
  if (twos > 0) {
    if (D % 2 == 0) return 0;
    std::int64_t r = ((D % 8) + 8) % 8;
    if ((twos & 1) && (r == 3 || r == 5)) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(D, n);
}

}  // namespace gpfree
