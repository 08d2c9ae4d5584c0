#pragma once

// Exact minimum hitting sets for small hypergraphs (a few hundred vertices,
// edges of size <= 3 in practice).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gpfree {

struct Hypergraph {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::uint32_t>> edges;
};

struct HittingSetResult {
  std::vector<std::uint32_t> vertices;  // sorted, a minimum hitting set
  std::vector<std::size_t> packing;     // pairwise disjoint edges (indices)
  std::uint64_t search_nodes = 0;
};

struct HittingSetOptions {
  // Known lower bound on the optimum, e.g. from a sub-hypergraph.
  std::size_t lower_bound = 0;
  // A known hitting set; the search only looks for something smaller.
  std::vector<std::uint32_t> incumbent;
};

bool is_hitting_set(const Hypergraph& graph, std::span<const std::uint32_t> vertices);

/// A maximal set of pairwise disjoint edges, chosen greedily smallest edges first.
std::vector<std::size_t> greedy_packing(const Hypergraph& graph);

/// Exact search: reductions (forced vertices, subsumed edges, dominated
/// vertices), independent components, memoized subproblems, packing bounds.
HittingSetResult min_hitting_set(const Hypergraph& graph, const HittingSetOptions& options = {});

}  // namespace gpfree
