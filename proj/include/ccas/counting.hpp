#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ccas/binomial.hpp"
#include "ccas/graph.hpp"
#include "ccas/sct.hpp"

namespace ccas {

/// Exact k-clique counts: per vertex and in total.
struct CliqueCounts {
  std::uint32_t k = 0;
  std::vector<Count> per_vertex;
  Count total = 0;

  friend bool operator==(const CliqueCounts&, const CliqueCounts&) = default;
};

/// What one root-to-leaf path contributes to the local counts.
struct PathContribution {
  Count per_pivot = 0;
  Count per_hold = 0;
  Count path_total = 0;

  friend bool operator==(const PathContribution&,
                         const PathContribution&) = default;
};

/// Every k-clique of the path contains all h holds and k - h of the p pivots,
/// so each hold lies in C(p, k-h) of them and each pivot in C(p-1, k-h-1).
inline PathContribution path_contribution(std::uint32_t holds,
                                          std::uint32_t pivots,
                                          std::uint32_t k) {
  if (k < 2) throw std::invalid_argument("clique size k must be at least 2");
  PathContribution c;
  if (holds > k || k - holds > pivots) return c;
  const std::int64_t need = static_cast<std::int64_t>(k) - holds;
  c.per_hold = binomial(pivots, need);
  c.per_pivot = pivots == 0 ? 0 : binomial(pivots - 1, need - 1);
  c.path_total = c.per_hold;
  return c;
}

/// True when the path encodes at least one k-clique.
inline bool contributes(const PathView& path, std::uint32_t k) {
  return path.holds <= k && k - path.holds <= path.pivots;
}

inline CliqueCounts local_counts(const Sct& sct) {
  CliqueCounts counts;
  counts.k = sct.k();
  counts.per_vertex.assign(sct.num_vertices(), 0);
  for (const PathView& path : sct.paths()) {
    if (!contributes(path, sct.k())) continue;
    PathContribution c = path_contribution(path.holds, path.pivots, sct.k());
    counts.total = checked_add(counts.total, c.path_total);
    sct.visit_path(path, [&](VertexId v, Label label) {
      Count add = label == Label::hold ? c.per_hold : c.per_pivot;
      counts.per_vertex[v] = checked_add(counts.per_vertex[v], add);
    });
  }
  return counts;
}

namespace detail {

template <class F>
void enumerate_cliques(const Graph& g, std::uint32_t k,
                       std::vector<VertexId>& clique,
                       const std::vector<VertexId>& candidates, F& emit) {
  if (clique.size() == k) {
    emit(clique);
    return;
  }
  const std::size_t missing = k - clique.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates.size() - i < missing) break;
    VertexId v = candidates[i];
    std::vector<VertexId> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
    }
    clique.push_back(v);
    enumerate_cliques(g, k, clique, next, emit);
    clique.pop_back();
  }
}

}  // namespace detail

/// Calls emit(clique) for every k-clique, each as an increasing id list.
/// Plain ordered DFS; meant for small graphs.
template <class F>
void for_each_clique(const Graph& g, std::uint32_t k, F&& emit) {
  if (k == 0) throw std::invalid_argument("clique size k must be positive");
  std::vector<VertexId> all(g.num_vertices());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  std::vector<VertexId> clique;
  clique.reserve(k);
  detail::enumerate_cliques(g, k, clique, all, emit);
}

inline CliqueCounts brute_force_counts(const Graph& g, std::uint32_t k) {
  CliqueCounts counts;
  counts.k = k;
  counts.per_vertex.assign(g.num_vertices(), 0);
  for_each_clique(g, k, [&](const std::vector<VertexId>& clique) {
    counts.total = checked_add(counts.total, 1);
    for (VertexId v : clique) {
      counts.per_vertex[v] = checked_add(counts.per_vertex[v], 1);
    }
  });
  return counts;
}

/// Δ: the largest number of k-cliques sharing one vertex.
inline Count max_local(const CliqueCounts& counts) {
  Count best = 0;
  for (Count c : counts.per_vertex) best = std::max(best, c);
  return best;
}

/// Local counts on the full graph `g`, computed on its (k-1)-core.
inline CliqueCounts count_cliques(const Graph& g, std::uint32_t k) {
  if (k < 2) throw std::invalid_argument("clique size k must be at least 2");
  CoreInfo info = core_decomposition(g);
  InducedSubgraph core = core_restriction(g, info, k - 1);
  CliqueCounts local = local_counts(build_sct(core.graph, k));
  CliqueCounts counts;
  counts.k = k;
  counts.total = local.total;
  counts.per_vertex.assign(g.num_vertices(), 0);
  for (std::size_t i = 0; i < core.to_parent.size(); ++i) {
    counts.per_vertex[core.to_parent[i]] = local.per_vertex[i];
  }
  return counts;
}

}  // namespace ccas
