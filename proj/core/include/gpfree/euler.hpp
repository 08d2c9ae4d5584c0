#pragma once

// Certified evaluation of the A3*-factor function f, Euler products split by
// prime decomposition, and the zeta / L-values they are compared against.
//
// Every Euler product is summed in log space over p <= P. The part over
// p > P is bounded analytically with pi(t) < 1.25506 t / ln t, which gives
//   sum_{p > P} p^-s <= s * 1.25506 * P^(1-s) / ((s - 1) ln P).

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "gpfree/approx.hpp"
#include "gpfree/field.hpp"

namespace gpfree {

/// True iff no base-3 digit of i is 2 (the greedy 3-AP-free set A3*).
bool a3_contains(std::uint64_t i) noexcept;

/// log f(x), f(x) = (1 - 1/x) prod_{i>=0} (1 + x^-(3^i)), to full long double precision.
long double log_f(long double x);

/// f(x) to within tol; the product stops at the first i with x^-(3^i) < tol/4.
ApproxValue f_factor(long double x, long double tol);

/// max of y^2 |log f(y)| over a fine grid of y in [2, 100]. The Euler-product
/// tails use |log f(y)| <= 2 / y^2, i.e. this maximum (< 1) doubled.
long double log_f_tail_constant_check();

/// Upper bound for sum_{p > P} p^-s (P >= 2, s >= 2).
long double prime_tail_sum(int s, std::uint64_t P);

enum class FactorKind {
  kFP,    // f(p): ramified primes
  kFP2,   // f(p^2): inert primes
  kFPSq,  // f(p)^2: split primes
};

FactorKind factor_kind(SplitKind kind) noexcept;

/// The quadratic character at every prime p <= P, computed once per field.
struct CharacterTable {
  FieldSpec field;
  std::uint64_t trunc_prime = 0;
  std::shared_ptr<const std::vector<std::uint32_t>> primes;
  std::size_t count = 0;  // primes[0, count) are <= trunc_prime
  std::vector<std::int8_t> chi;
};

CharacterTable make_character_table(const FieldSpec& field, std::uint64_t P);

/// prod_{p <= P} factor(p) with factor chosen per prime. `worst` is the kind
/// with the largest per-prime log magnitude the selector can return; it fixes
/// the tail bound.
ApproxValue splitting_product(std::uint64_t P, const std::function<FactorKind(std::uint64_t)>& kind_of,
                              FactorKind worst);

/// Inert -> f(p^2), split -> f(p)^2, ramified -> f(p) over all rational p.
ApproxValue euler_product_by_splitting(const FieldSpec& field, std::uint64_t P);
ApproxValue euler_product_by_splitting(const CharacterTable& table);

/// zeta(s) for integer s >= 2: a partial sum plus an Euler-Maclaurin tail.
/// Results are memoized per (s, tol).
ApproxValue riemann_zeta_int(int s, long double tol = 1e-13L);

/// L(s, chi_D) as an Euler product over p <= P.
ApproxValue dirichlet_L(const FieldSpec& field, int s, std::uint64_t P);
ApproxValue dirichlet_L(const CharacterTable& table, int s);

/// zeta_K(s) = zeta(s) L(s, chi). Also evaluates the prime-ideal Euler
/// product and throws ConsistencyError if the two disagree beyond their bounds.
ApproxValue dedekind_zeta(const FieldSpec& field, int s, std::uint64_t P);
ApproxValue dedekind_zeta(const CharacterTable& table, int s);

/// The prime-ideal Euler product route on its own.
ApproxValue dedekind_zeta_prime_ideals(const CharacterTable& table, int s);

}  // namespace gpfree
