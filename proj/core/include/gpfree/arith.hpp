#pragma once

// Small integer helpers shared by every module: primality, trial-division
// factorization, modular square roots and a shared prime table.

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace gpfree {

using PrimeFactorization = std::vector<std::pair<std::uint64_t, int>>;

bool is_prime(std::uint64_t n) noexcept;
bool is_squarefree(std::int64_t n) noexcept;

// Trial division; fine for the n <= 1e12 range used here.
PrimeFactorization factorize(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

// Square root of a modulo an odd prime p (Tonelli-Shanks). Requires a to be a
// quadratic residue; returns the root in [0, p/2].
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p);

// Immutable, shared table of all primes <= limit (at least). Built once per
// requested size and cached; safe to call from several threads.
std::shared_ptr<const std::vector<std::uint32_t>> prime_table(std::uint64_t limit);

// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(std::int64_t a, std::uint64_t n) noexcept;

// Kronecker symbol (D/n) for n >= 1.
int kronecker(std::int64_t D, std::uint64_t n) noexcept;

}  // namespace gpfree
