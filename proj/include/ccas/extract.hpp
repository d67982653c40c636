#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccas/counting.hpp"
#include "ccas/fw.hpp"
#include "ccas/graph.hpp"

namespace ccas {

enum class CdsSource { fw_extraction, oracle };

inline const char* source_name(CdsSource source) {
  return source == CdsSource::oracle ? "oracle" : "fw-extraction";
}

struct CdsResult {
  std::vector<VertexId> members;      // dense ids, ascending
  std::vector<ExternalId> vertices;   // external ids, ascending
  std::uint32_t k = 0;
  Count clique_count = 0;
  double density = 0.0;
  CdsSource source = CdsSource::fw_extraction;
};

/// Largest subset the brute-force clique counter is used for in `density`.
inline constexpr std::size_t kBruteForceDensityLimit = 30;

/// Largest (k-1)-core the exhaustive CDS oracle will search.
inline constexpr std::size_t kOracleVertexLimit = 16;

namespace detail {

inline Count induced_clique_count(const Graph& g, std::span<const VertexId> s,
                                  std::uint32_t k) {
  Graph sub = induced_subgraph(g, s).graph;
  if (s.size() <= kBruteForceDensityLimit) return brute_force_counts(sub, k).total;
  return count_cliques(sub, k).total;
}

inline CdsResult make_result(const Graph& g, std::vector<VertexId> members,
                             std::uint32_t k, Count cliques, CdsSource source) {
  CdsResult result;
  result.k = k;
  result.clique_count = cliques;
  result.source = source;
  result.density =
      members.empty() ? 0.0
                      : static_cast<double>(cliques) / static_cast<double>(members.size());
  for (VertexId v : members) result.vertices.push_back(g.external_id(v));
  std::sort(result.vertices.begin(), result.vertices.end());
  result.members = std::move(members);
  return result;
}

/// a/|A| > b/|B| in exact arithmetic. Counts stay far below 2^64 wherever
/// the comparison is used in practice; the products are checked anyway.
inline bool denser(Count a, std::size_t size_a, Count b, std::size_t size_b) {
  return checked_mul(a, size_b) > checked_mul(b, size_a);
}

}  // namespace detail

/// ρk(S) = |Ψk(G[S])| / |S|.
inline CdsResult density(const Graph& g, std::span<const VertexId> s,
                         std::uint32_t k) {
  if (s.empty()) throw std::invalid_argument("density of an empty vertex set");
  std::vector<VertexId> members(s.begin(), s.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Count cliques = detail::induced_clique_count(g, members, k);
  return detail::make_result(g, std::move(members), k, cliques,
                             CdsSource::fw_extraction);
}

/// Level-set sweep. Vertices are sorted by weight descending (ties by id);
/// a candidate is every prefix that ends where the weight strictly drops. The
/// densest candidate wins, the shorter one on ties.
inline CdsResult extract_cds(const Graph& g, const WeightVector& w,
                             std::uint32_t k) {
  const std::size_t n = g.num_vertices();
  if (w.r.size() != n) {
    throw std::invalid_argument("weight vector does not match graph size");
  }
  if (n == 0) return detail::make_result(g, {}, k, 0, CdsSource::fw_extraction);

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return w.r[a] != w.r[b] ? w.r[a] > w.r[b] : a < b;
  });

  std::size_t best_size = 0;
  Count best_count = 0;
  for (std::size_t end = 1; end <= n; ++end) {
    if (end < n && w.r[order[end]] == w.r[order[end - 1]]) continue;
    std::vector<VertexId> prefix(order.begin(), order.begin() + end);
    std::sort(prefix.begin(), prefix.end());
    Count cliques = detail::induced_clique_count(g, prefix, k);
    if (best_size == 0 || detail::denser(cliques, end, best_count, best_size)) {
      best_size = end;
      best_count = cliques;
    }
  }
  if (best_count == 0) best_size = 1;

  std::vector<VertexId> members(order.begin(), order.begin() + best_size);
  std::sort(members.begin(), members.end());
  return detail::make_result(g, std::move(members), k, best_count,
                             CdsSource::fw_extraction);
}

/// Exact CDS by exhaustive search over the (k-1)-core, which contains every
/// vertex of any set with positive density. Ties go to the lexicographically
/// smallest sorted id list. Throws OracleSizeError if the core has more than
/// kOracleVertexLimit vertices.
inline CdsResult exact_cds_bruteforce(const Graph& g, std::uint32_t k) {
  if (k < 2) throw std::invalid_argument("clique size k must be at least 2");
  CoreInfo info = core_decomposition(g);
  InducedSubgraph core = core_restriction(g, info, k - 1);
  const std::size_t n = core.graph.num_vertices();
  if (n > kOracleVertexLimit) {
    throw OracleSizeError("exact CDS oracle supports at most " +
                          std::to_string(kOracleVertexLimit) +
                          " vertices after (k-1)-core reduction, got " +
                          std::to_string(n));
  }

  std::vector<std::uint32_t> masks;
  for_each_clique(core.graph, k, [&](const std::vector<VertexId>& clique) {
    std::uint32_t mask = 0;
    for (VertexId v : clique) mask |= 1u << v;
    masks.push_back(mask);
  });

  if (masks.empty()) {
    if (g.empty()) return detail::make_result(g, {}, k, 0, CdsSource::oracle);
    return detail::make_result(g, {VertexId{0}}, k, 0, CdsSource::oracle);
  }

  auto members_of = [&](std::uint32_t subset) {
    std::vector<VertexId> out;
    for (VertexId i = 0; i < n; ++i) {
      if (subset & (1u << i)) out.push_back(core.to_parent[i]);
    }
    return out;  // ascending: to_parent is increasing
  };

  std::uint32_t best = 0;
  Count best_count = 0;
  std::size_t best_size = 0;
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    Count cliques = 0;
    for (std::uint32_t m : masks) cliques += (m & subset) == m;
    const std::size_t size = static_cast<std::size_t>(std::popcount(subset));
    bool take = best == 0 || detail::denser(cliques, size, best_count, best_size);
    if (!take && !detail::denser(best_count, best_size, cliques, size)) {
      take = members_of(subset) < members_of(best);
    }
    if (take) {
      best = subset;
      best_count = cliques;
      best_size = size;
    }
  }
  return detail::make_result(g, members_of(best), k, best_count,
                             CdsSource::oracle);
}

}  // namespace ccas
