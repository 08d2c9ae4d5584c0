#include "gpfree/upper_bounds.hpp"

#include <algorithm>
#include <map>

#include "gpfree/errors.hpp"

namespace gpfree {

Rational riddell_bound(const FieldSpec& field) {
  const auto q = static_cast<std::int64_t>(smallest_nonunit_norms(field, 1).at(0));
  return Rational(q * q * q - q, q * q * q - 1);
}

std::vector<PrimeIdealTag> smooth_prime_tags(const FieldSpec& field) {
  const IdealDomain domain(field);
  for (std::uint64_t bound = 16;; bound *= 2) {
    auto tags = domain.prime_ideals_up_to(bound);
    if (tags.size() >= 3) {
      // Anything of norm <= bound is listed, so the first three are final.
      tags.resize(3);
      return tags;
    }
  }
}

namespace {

std::vector<std::uint64_t> tag_norms_of(const std::vector<PrimeIdealTag>& tags) {
  std::vector<std::uint64_t> norms;
  for (const auto& t : tags) norms.push_back(t.norm);
  return norms;
}

void check_tag_norms(std::span<const std::uint64_t> tag_norms) {
  if (tag_norms.empty() || tag_norms.size() > 3) {
    throw Error(ErrorKind::kDomainError, "between one and three tag norms are needed");
  }
  for (auto q : tag_norms) {
    if (q < 2) throw Error(ErrorKind::kDomainError, "tag norms must be at least 2");
  }
}

}  // namespace

std::vector<SmoothElement> smooth_elements(std::span<const std::uint64_t> tag_norms, std::uint64_t bound) {
  check_tag_norms(tag_norms);
  std::vector<SmoothElement> out;
  SmoothElement cur;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t norm) -> void {
    if (i == tag_norms.size()) {
      cur.norm = norm;
      out.push_back(cur);
      return;
    }
    for (int e = 0;; ++e) {
      cur.exponents[i] = e;
      self(self, i + 1, norm);
      if (norm > bound / tag_norms[i]) break;
      norm *= tag_norms[i];
    }
    cur.exponents[i] = 0;
  };
  if (bound >= 1) rec(rec, 0, 1);
  std::sort(out.begin(), out.end(), [](const SmoothElement& x, const SmoothElement& y) {
    return x.norm != y.norm ? x.norm < y.norm : x.exponents < y.exponents;
  });
  return out;
}

std::vector<SmoothElement> smooth_elements(const FieldSpec& field, std::uint64_t bound) {
  const auto norms = tag_norms_of(smooth_prime_tags(field));
  return smooth_elements(norms, bound);
}

Hypergraph smooth_triple_graph(std::span<const SmoothElement> elements) {
  std::map<std::array<int, 3>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elements.size(); ++i) index[elements[i].exponents] = i;
  Hypergraph graph;
  graph.vertex_count = elements.size();
  for (std::uint32_t top = 0; top < elements.size(); ++top) {
    const auto& x = elements[top].exponents;
    std::array<int, 3> w{};
    for (w[0] = 0; 2 * w[0] <= x[0]; ++w[0]) {
      for (w[1] = 0; 2 * w[1] <= x[1]; ++w[1]) {
        for (w[2] = 0; 2 * w[2] <= x[2]; ++w[2]) {
          if (w == std::array<int, 3>{}) continue;
          std::array<int, 3> mid{};
          std::array<int, 3> low{};
          for (int k = 0; k < 3; ++k) {
            mid[k] = x[k] - w[k];
            low[k] = x[k] - 2 * w[k];
          }
          const auto lo = index.find(low);
          const auto mi = index.find(mid);
          if (lo == index.end() || mi == index.end()) continue;
          graph.edges.push_back({lo->second, mi->second, top});
        }
      }
    }
  }
  return graph;
}

ExclusionProfile exclusion_profile(std::span<const std::uint64_t> tag_norms, std::uint64_t n_max,
                                   std::uint64_t limit) {
  if (n_max > limit) {
    throw Error(ErrorKind::kLimitExceeded,
                "norm bound " + std::to_string(n_max) + " exceeds the limit " + std::to_string(limit));
  }
  ExclusionProfile profile;
  profile.tag_norms.assign(tag_norms.begin(), tag_norms.end());
  profile.n_max = n_max;
  const auto elements = smooth_elements(tag_norms, n_max);
  const Hypergraph full = smooth_triple_graph(elements);

  std::vector<std::uint32_t> solution;
  std::size_t edge_end = 0;
  std::size_t vertex_end = 0;
  while (vertex_end < elements.size()) {
    const std::uint64_t norm = elements[vertex_end].norm;
    while (vertex_end < elements.size() && elements[vertex_end].norm == norm) ++vertex_end;
    const std::size_t edge_begin = edge_end;
    while (edge_end < full.edges.size() && full.edges[edge_end][2] < vertex_end) ++edge_end;
    if (edge_end == edge_begin) continue;

    Hypergraph graph;
    graph.vertex_count = vertex_end;
    graph.edges.assign(full.edges.begin(), full.edges.begin() + static_cast<std::ptrdiff_t>(edge_end));
    if (is_hitting_set(graph, solution)) continue;

    // Patch the previous optimum with the top of each new unhit edge.
    HittingSetOptions options;
    options.lower_bound = solution.size();
    options.incumbent = solution;
    for (std::size_t i = edge_begin; i < edge_end; ++i) {
      const auto& e = graph.edges[i];
      const bool hit = std::any_of(e.begin(), e.end(), [&](auto v) {
        return std::find(options.incumbent.begin(), options.incumbent.end(), v) != options.incumbent.end();
      });
      if (!hit) options.incumbent.push_back(e[2]);
    }
    const HittingSetResult result = min_hitting_set(graph, options);
    if (result.vertices.size() > solution.size()) {
      profile.thresholds.push_back({norm, result.vertices.size(), result.packing.size(), result.search_nodes});
    }
    solution = result.vertices;
  }
  for (auto v : solution) profile.final_exclusions.push_back(elements[v]);
  return profile;
}

ExclusionProfile exclusion_profile(const FieldSpec& field, std::uint64_t n_max, std::uint64_t limit) {
  const auto tags = smooth_prime_tags(field);
  const auto norms = tag_norms_of(tags);
  ExclusionProfile profile = exclusion_profile(norms, n_max, limit);
  profile.prime_tags = tags;
  return profile;
}

MinExclusions min_exclusions(const FieldSpec& field, std::uint64_t n, std::uint64_t limit) {
  const ExclusionProfile profile = exclusion_profile(field, n, limit);
  MinExclusions out;
  out.excluded = profile.final_exclusions;
  out.count = out.excluded.size();
  if (!profile.thresholds.empty()) out.packing_bound = profile.thresholds.back().packing_bound;
  return out;
}

Rational coprime_density(std::span<const std::uint64_t> tag_norms) {
  Rational r(1);
  for (auto q : tag_norms) r *= Rational(static_cast<std::int64_t>(q - 1), static_cast<std::int64_t>(q));
  return r;
}

Rational coprime_density(const FieldSpec& field) {
  const auto norms = tag_norms_of(smooth_prime_tags(field));
  return coprime_density(norms);
}

Rational improved_bound(const ExclusionProfile& profile) {
  Rational sum(0);
  std::size_t prev = 0;
  for (const auto& t : profile.thresholds) {
    sum += Rational(static_cast<std::int64_t>(t.cumulative_exclusions - prev), static_cast<std::int64_t>(t.norm));
    prev = t.cumulative_exclusions;
  }
  return Rational(1) - coprime_density(profile.tag_norms) * sum;
}

Rational improved_bound(const FieldSpec& field, std::uint64_t n_max, std::uint64_t limit) {
  return improved_bound(exclusion_profile(field, n_max, limit));
}

UpperBoundReport upper_bound_report(const FieldSpec& field, std::uint64_t n_max, std::uint64_t limit) {
  UpperBoundReport r;
  r.field = field;
  r.q = smallest_nonunit_norms(field, 1).at(0);
  r.n_max = n_max;
  r.riddell = riddell_bound(field);
  r.improved = improved_bound(field, n_max, limit);
  r.best = std::min(r.riddell, r.improved);
  return r;
}

}  // namespace gpfree
