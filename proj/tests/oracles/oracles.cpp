#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

int legendre_by_count(std::int64_t D, std::uint64_t p) {
  const auto P = static_cast<std::int64_t>(p);
  const std::int64_t r = ((D % P) + P) % P;
  if (r == 0) return 0;
  int roots = 0;
  for (std::int64_t x = 0; x < P; ++x) {
    if ((x * x) % P == r) ++roots;
  }
  return roots - 1;
}

int kronecker(std::int64_t D, std::uint64_t n) {
  int result = 1;
  for (std::uint64_t p = 2; n > 1; ++p) {
    while (n % p == 0) {
      n /= p;
      int s = 0;
      if (p == 2) {
        const std::int64_t m = ((D % 8) + 8) % 8;
        s = (m % 2 == 0) ? 0 : (m == 1 || m == 7) ? 1 : -1;
      } else {
        s = legendre_by_count(D, p);
      }
      result *= s;
    }
  }
  return result;
}

int generator_roots_mod(std::int64_t d, std::uint64_t p) {
  const auto P = static_cast<std::int64_t>(p);
  const bool half = ((d % 4) + 4) % 4 == 1;
  int roots = 0;
  for (std::int64_t t = 0; t < P; ++t) {
    // t^2 - t - (d-1)/4 or t^2 - d
    const std::int64_t g = half ? t * t - t - (d - 1) / 4 : t * t - d;
    if (((g % P) + P) % P == 0) ++roots;
  }
  // A double root shows up once.
  return roots;
}

long double f_direct(long double x) {
  long double v = 1.0L - 1.0L / x;
  long double power = x;  // x^{3^i}
  for (int i = 0; i < 60; ++i) {
    const long double term = 1.0L / power;
    if (term < 1e-30L) break;
    v *= 1.0L + term;
    power = std::pow(power, 3.0L);
    if (!std::isfinite(power)) break;
  }
  return v;
}

long double f_series(long double x, int depth) {
  long double sum = 0;
  for (int i = 0; i <= depth; ++i) {
    int k = i;
    bool ok = true;
    while (k > 0) {
      if (k % 3 == 2) ok = false;
      k /= 3;
    }
    if (ok) sum += std::pow(x, -static_cast<long double>(i));
  }
  return (1.0L - 1.0L / x) * sum;
}

long double zeta_direct(int s, std::uint64_t N) {
  long double sum = 0;
  for (std::uint64_t n = N; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
  const long double lo = std::pow(static_cast<long double>(N + 1), 1.0L - s) / (s - 1);
  const long double hi = std::pow(static_cast<long double>(N), 1.0L - s) / (s - 1);
  return sum + (lo + hi) / 2;
}

long double periodic_series(const std::vector<int>& period_values, int s, std::uint64_t N) {
  long double sum = 0;
  for (std::uint64_t n = N; n >= 1; --n) {
    const int c = period_values[n % period_values.size()];
    if (c != 0) sum += c * std::pow(static_cast<long double>(n), -static_cast<long double>(s));
  }
  return sum;
}

long double rankin_partial(std::uint64_t P) {
  long double prod = 1.0L;
  for (auto p : primes_up_to(P)) prod *= f_direct(static_cast<long double>(p));
  return prod;
}

std::vector<bool> greedy_integers(std::uint64_t n) {
  std::vector<bool> kept(n + 1, false);
  for (std::uint64_t x = 1; x <= n; ++x) {
    bool drop = false;
    for (std::uint64_t r = 2; r * r <= x && !drop; ++r) {
      if (x % (r * r) != 0) continue;
      const std::uint64_t y = x / (r * r);
      drop = kept[y] && kept[y * r];
    }
    kept[x] = !drop;
  }
  return kept;
}

bool Ring::half() const { return ((d % 4) + 4) % 4 == 1; }

std::int64_t Ring::norm(Elt x) const {
  if (half()) {
    // |a + b(1 + sqrt d)/2|^2 = ((2a + b)^2 - d b^2) / 4
    const std::int64_t u = 2 * x.a + x.b;
    return (u * u - d * x.b * x.b) / 4;
  }
  return x.a * x.a - d * x.b * x.b;
}

Elt Ring::mul(Elt x, Elt y) const {
  if (half()) {
    // work in coordinates of (1, sqrt d) doubled: u + v sqrt d with u = 2a + b, v = b
    const std::int64_t u1 = 2 * x.a + x.b, v1 = x.b;
    const std::int64_t u2 = 2 * y.a + y.b, v2 = y.b;
    const std::int64_t u = (u1 * u2 + d * v1 * v2) / 2;
    const std::int64_t v = (u1 * v2 + v1 * u2) / 2;
    return {(u - v) / 2, v};
  }
  return {x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a};
}

Elt Ring::conj(Elt x) const {
  if (half()) return {x.a + x.b, -x.b};
  return {x.a, -x.b};
}

bool Ring::divides(Elt y, Elt z) const {
  const Elt t = mul(z, conj(y));
  const std::int64_t n = norm(y);
  return t.a % n == 0 && t.b % n == 0;
}

std::vector<Elt> elements_box_scan(const Ring& ring, std::int64_t bound) {
  std::vector<Elt> out;
  const auto lim = static_cast<std::int64_t>(2 * std::sqrt(static_cast<double>(bound)) + 3);
  for (std::int64_t a = -lim; a <= lim; ++a) {
    for (std::int64_t b = -lim; b <= lim; ++b) {
      if ((a != 0 || b != 0) && ring.norm({a, b}) <= bound) out.push_back({a, b});
    }
  }
  return out;
}

std::set<Elt> greedy_elements_excluded(std::int64_t d, std::int64_t bound) {
  const Ring ring{d};
  auto elements = elements_box_scan(ring, bound);
  std::stable_sort(elements.begin(), elements.end(),
                   [&](Elt x, Elt y) { return ring.norm(x) < ring.norm(y); });
  std::map<std::int64_t, std::vector<Elt>> kept_by_norm;
  std::set<Elt> kept;
  std::set<Elt> dropped;
  for (const Elt& x : elements) {
    const std::int64_t nx = ring.norm(x);
    bool drop = false;
    for (const auto& [ny, ys] : kept_by_norm) {
      if (ny >= nx || drop) break;
      const std::int64_t prod = nx * ny;
      const auto nz = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(prod))));
      if (nz * nz != prod) continue;
      auto it = kept_by_norm.find(nz);
      if (it == kept_by_norm.end()) continue;
      for (const Elt& y : ys) {
        const Elt xy = ring.mul(x, y);
        for (const Elt& z : it->second) {
          if (ring.mul(z, z) == xy && ring.divides(y, z)) {
            drop = true;
            break;
          }
        }
        if (drop) break;
      }
    }
    if (drop) {
      dropped.insert(x);
    } else {
      kept.insert(x);
      kept_by_norm[nx].push_back(x);
    }
  }
  return dropped;
}

std::size_t brute_min_hitting_set(std::size_t n, const std::vector<std::vector<std::uint32_t>>& edges) {
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      const bool hits = std::all_of(edges.begin(), edges.end(), [&](const auto& e) {
        return std::any_of(e.begin(), e.end(), [&](auto v) { return mask[v]; });
      });
      if (hits) return k;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return n;
}

std::size_t count_triples_pairscan(const std::vector<std::map<std::uint64_t, int>>& items) {
  std::set<std::map<std::uint64_t, int>> all(items.begin(), items.end());
  std::size_t count = 0;
  for (const auto& lo : all) {
    for (const auto& mid : all) {
      if (lo == mid) continue;
      // w = mid - lo must be >= 0 componentwise; top = mid + w
      bool ok = true;
      for (const auto& [k, e] : lo) {
        auto it = mid.find(k);
        if (it == mid.end() || it->second < e) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::map<std::uint64_t, int> top;
      for (const auto& [k, e] : mid) {
        auto it = lo.find(k);
        const int w = e - (it == lo.end() ? 0 : it->second);
        top[k] = e + w;
      }
      if (all.contains(top)) ++count;
    }
  }
  return count;
}

bool scaled_norm_progression(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& intervals, std::uint64_t m,
                             const std::vector<std::uint64_t>& ratios) {
  std::vector<bool> inside(m + 1, false);
  for (std::uint64_t n = 1; n <= m; ++n) {
    for (auto [a, b] : intervals) {
      // m/a < n <= m/b
      if (n * a > m && n * b <= m) inside[n] = true;
    }
  }
  for (std::uint64_t n = 1; n <= m; ++n) {
    if (!inside[n]) continue;
    for (auto s : ratios) {
      if (n * s * s > m) break;
      if (inside[n * s] && inside[n * s * s]) return true;
    }
  }
  return false;
}

}  // namespace oracle
