#include "gpfree/hitting_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "gpfree/errors.hpp"

namespace gpfree {

namespace {

using Edge = std::vector<std::uint32_t>;  // sorted vertex ids
using Edges = std::vector<Edge>;

void normalize(Edges& edges) {
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool contains(const Edge& e, std::uint32_t v) { return std::binary_search(e.begin(), e.end(), v); }

Edges pick(const Edges& edges, std::uint32_t v) {
  Edges out;
  for (const auto& e : edges) {
    if (!contains(e, v)) out.push_back(e);
  }
  return out;
}

void forbid(Edges& edges, std::uint32_t v) {
  for (auto& e : edges) {
    auto it = std::lower_bound(e.begin(), e.end(), v);
    if (it != e.end() && *it == v) e.erase(it);
  }
}

std::size_t packing_size(const Edges& edges) {
  // edges are sorted smallest first
  std::vector<std::uint32_t> used;
  std::size_t count = 0;
  for (const auto& e : edges) {
    bool free = true;
    for (auto v : e) {
      if (std::binary_search(used.begin(), used.end(), v)) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    ++count;
    for (auto v : e) used.insert(std::lower_bound(used.begin(), used.end(), v), v);
  }
  return count;
}

std::size_t degree_bound(const Edges& edges) {
  std::map<std::uint32_t, std::size_t> degree;
  for (const auto& e : edges) {
    for (auto v : e) ++degree[v];
  }
  std::vector<std::size_t> d;
  d.reserve(degree.size());
  for (auto [v, k] : degree) d.push_back(k);
  std::sort(d.rbegin(), d.rend());
  std::size_t covered = 0;
  std::size_t t = 0;
  while (covered < edges.size() && t < d.size()) covered += d[t++];
  return t;
}

struct Outcome {
  bool found = false;
  std::vector<std::uint32_t> picks;
};

class Solver {
 public:
  std::uint64_t nodes = 0;

  // Minimum hitting set of `edges` if its size is <= ub.
  Outcome solve(Edges edges, long ub) {
    ++nodes;
    std::vector<std::uint32_t> forced;
    if (!reduce(edges, forced, ub)) return {};
    ub -= static_cast<long>(forced.size());
    if (ub < 0) return {};
    if (edges.empty()) return {true, forced};

    auto comps = components(edges);
    Outcome out;
    if (comps.size() == 1) {
      out = solve_connected(std::move(comps[0]), ub);
    } else {
      out = solve_components(std::move(comps), ub);
    }
    if (!out.found) return {};
    out.picks.insert(out.picks.end(), forced.begin(), forced.end());
    return out;
  }

 private:
  struct Memo {
    std::size_t lower = 0;  // opt >= lower
    bool exact = false;
    std::vector<std::uint32_t> picks;
  };
  std::map<Edges, Memo> memo_;
  static constexpr std::size_t kMemoLimit = 2'000'000;

  // Forced vertices, subsumed edges, dominated vertices. False if infeasible.
  bool reduce(Edges& edges, std::vector<std::uint32_t>& forced, long ub) {
    bool changed = true;
    while (changed) {
      changed = false;
      normalize(edges);
      if (!edges.empty() && edges.front().empty()) return false;
      while (!edges.empty() && edges.front().size() == 1) {
        const std::uint32_t v = edges.front()[0];
        forced.push_back(v);
        if (static_cast<long>(forced.size()) > ub) return false;
        edges = pick(edges, v);
        changed = true;
      }
      if (changed) continue;
      if (drop_subsumed(edges)) changed = true;
      if (drop_dominated(edges)) changed = true;
    }
    return true;
  }

  static bool subset(const Edge& a, const Edge& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  static bool drop_subsumed(Edges& edges) {
    const std::size_t before = edges.size();
    Edges kept;
    for (const auto& e : edges) {
      bool redundant = false;
      for (const auto& k : kept) {
        if (k.size() < e.size() && subset(k, e)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(e);
    }
    edges = std::move(kept);
    return edges.size() != before;
  }

  // If every edge through u also passes through v, u can be dropped.
  static bool drop_dominated(Edges& edges) {
    std::map<std::uint32_t, std::vector<std::uint32_t>> incidence;
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
      for (auto v : edges[i]) incidence[v].push_back(i);
    }
    for (const auto& [u, eu] : incidence) {
      for (const auto& [v, ev] : incidence) {
        if (u == v || ev.size() < eu.size()) continue;
        if (ev.size() == eu.size() && v > u) continue;  // keep the smaller id of twins
        if (std::includes(ev.begin(), ev.end(), eu.begin(), eu.end())) {
          forbid(edges, u);
          return true;
        }
      }
    }
    return false;
  }

  static std::vector<Edges> components(const Edges& edges) {
    std::map<std::uint32_t, std::uint32_t> parent;
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : edges) {
      for (auto v : e) parent.try_emplace(v, v);
    }
    for (const auto& e : edges) {
      for (std::size_t i = 1; i < e.size(); ++i) {
        const auto a = find(e[0]);
        const auto b = find(e[i]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::map<std::uint32_t, Edges> groups;
    for (const auto& e : edges) groups[find(e[0])].push_back(e);
    std::vector<Edges> out;
    for (auto& [root, g] : groups) out.push_back(std::move(g));
    return out;
  }

  static std::size_t lower_bound_of(const Edges& edges) {
    return std::max(packing_size(edges), degree_bound(edges));
  }

  Outcome solve_components(std::vector<Edges> comps, long ub) {
    std::vector<std::size_t> lbs;
    long total_lb = 0;
    for (const auto& c : comps) {
      lbs.push_back(lower_bound_of(c));
      total_lb += static_cast<long>(lbs.back());
    }
    if (total_lb > ub) return {};
    Outcome out{true, {}};
    long used = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      total_lb -= static_cast<long>(lbs[i]);
      const long budget = ub - used - total_lb;
      Outcome r = solve_connected(std::move(comps[i]), budget);
      if (!r.found) return {};
      used += static_cast<long>(r.picks.size());
      out.picks.insert(out.picks.end(), r.picks.begin(), r.picks.end());
    }
    return out;
  }

  Outcome solve_connected(Edges edges, long ub) {
    auto it = memo_.find(edges);
    if (it != memo_.end()) {
      const Memo& m = it->second;
      if (m.exact) {
        if (static_cast<long>(m.picks.size()) <= ub) return {true, m.picks};
        return {};
      }
      if (static_cast<long>(m.lower) > ub) return {};
    }
    const std::size_t lb = lower_bound_of(edges);
    if (static_cast<long>(lb) > ub) {
      remember(edges, lb, nullptr);
      return {};
    }

    // Branch on the smallest edge; ties broken by total vertex degree.
    std::map<std::uint32_t, std::size_t> degree;
    for (const auto& e : edges) {
      for (auto v : e) ++degree[v];
    }
    std::size_t best_edge = 0;
    std::size_t best_score = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].size() > edges[0].size()) break;
      std::size_t score = 0;
      for (auto v : edges[i]) score += degree[v];
      if (score > best_score) {
        best_score = score;
        best_edge = i;
      }
    }
    Edge branch = edges[best_edge];
    std::sort(branch.begin(), branch.end(), [&](auto a, auto b) {
      return degree[a] != degree[b] ? degree[a] > degree[b] : a < b;
    });

    Outcome best;
    long bound = ub;
    Edges rest = edges;
    for (auto v : branch) {
      Outcome r = solve(pick(rest, v), bound - 1);
      if (r.found) {
        r.picks.push_back(v);
        best = std::move(r);
        bound = static_cast<long>(best.picks.size()) - 1;
        if (static_cast<long>(best.picks.size()) <= static_cast<long>(lb)) break;
      }
      forbid(rest, v);
    }
    if (best.found) {
      remember(edges, best.picks.size(), &best.picks);
    } else {
      remember(edges, static_cast<std::size_t>(ub + 1), nullptr);
    }
    return best;
  }

  void remember(const Edges& edges, std::size_t lower, const std::vector<std::uint32_t>* picks) {
    auto it = memo_.find(edges);
    if (it == memo_.end()) {
      if (memo_.size() >= kMemoLimit) return;
      it = memo_.emplace(edges, Memo{}).first;
    }
    Memo& m = it->second;
    if (picks) {
      m.exact = true;
      m.lower = lower;
      m.picks = *picks;
    } else if (!m.exact) {
      m.lower = std::max(m.lower, lower);
    }
  }
};

}  // namespace

bool is_hitting_set(const Hypergraph& graph, std::span<const std::uint32_t> vertices) {
  std::vector<bool> chosen(graph.vertex_count, false);
  for (auto v : vertices) {
    if (v < chosen.size()) chosen[v] = true;
  }
  return std::all_of(graph.edges.begin(), graph.edges.end(), [&](const auto& e) {
    return std::any_of(e.begin(), e.end(), [&](auto v) { return chosen[v]; });
  });
}

std::vector<std::size_t> greedy_packing(const Hypergraph& graph) {
  std::vector<std::size_t> order(graph.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return graph.edges[a].size() < graph.edges[b].size(); });
  std::vector<bool> used(graph.vertex_count, false);
  std::vector<std::size_t> packing;
  for (auto i : order) {
    const auto& e = graph.edges[i];
    if (std::any_of(e.begin(), e.end(), [&](auto v) { return used[v]; })) continue;
    for (auto v : e) used[v] = true;
    packing.push_back(i);
  }
  std::sort(packing.begin(), packing.end());
  return packing;
}

HittingSetResult min_hitting_set(const Hypergraph& graph, const HittingSetOptions& options) {
  for (const auto& e : graph.edges) {
    for (auto v : e) {
      if (v >= graph.vertex_count) throw Error(ErrorKind::kDomainError, "edge vertex out of range");
    }
  }
  HittingSetResult result;
  result.packing = greedy_packing(graph);
  Edges edges(graph.edges.begin(), graph.edges.end());
  Solver solver;

  std::vector<std::uint32_t> incumbent;
  const bool have_incumbent = !options.incumbent.empty() && is_hitting_set(graph, options.incumbent);
  if (have_incumbent) {
    incumbent = options.incumbent;
    std::sort(incumbent.begin(), incumbent.end());
    incumbent.erase(std::unique(incumbent.begin(), incumbent.end()), incumbent.end());
  }
  if (have_incumbent && incumbent.size() <= std::max(options.lower_bound, result.packing.size())) {
    result.vertices = incumbent;
    return result;
  }
  // Upper bound: the incumbent's size minus one, or every vertex.
  const long ub = have_incumbent ? static_cast<long>(incumbent.size()) - 1 : static_cast<long>(graph.vertex_count);
  Outcome out = solver.solve(std::move(edges), ub);
  result.search_nodes = solver.nodes;
  if (out.found) {
    result.vertices = std::move(out.picks);
  } else if (have_incumbent) {
    result.vertices = incumbent;
  } else {
    throw Error(ErrorKind::kConsistencyError, "hitting-set search found no solution");
  }
  std::sort(result.vertices.begin(), result.vertices.end());
  return result;
}

}  // namespace gpfree
