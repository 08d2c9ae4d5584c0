#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "output.hpp"

namespace gpfree::cli {

struct Options {
  std::optional<std::int64_t> d;
  std::optional<std::uint64_t> trunc_prime;
  std::uint64_t nmax = 500;
  std::optional<std::uint64_t> norm_max;
  std::int64_t dmin = 1;
  std::int64_t dmax = 10'000;
  double bins = 0.01;
  bool preset = false;
  std::optional<std::string> intervals;
  std::string format = "json";
  std::optional<std::string> out;
  std::optional<std::string> hist_out;
  unsigned jobs = 1;
  bool by_discriminant = false;
  std::string mode = "field";
};

/// What a command prints: the envelope, or its CSV form when asked.
struct Output {
  Json envelope;
  std::optional<std::string> csv;  // overrides the generic key,value CSV
};

// Usage problems that CLI11 cannot see (missing or conflicting flags).
struct UsageError {
  std::string message;
};

Output field_info(const Options& o);
Output density_rankin(const Options& o);
Output density_greedy(const Options& o);
Output density_ideals(const Options& o);
Output density_rational_ratio(const Options& o);
Output bounds_universal(const Options& o);
Output bounds_riddell(const Options& o);
Output bounds_smooth(const Options& o);
Output bounds_lower(const Options& o);
Output verify_greedy(const Options& o);
Output verify_characterization(const Options& o);
Output verify_gauss(const Options& o);
Output survey(const Options& o);

}  // namespace gpfree::cli
