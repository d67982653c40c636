#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccas/binomial.hpp"
#include "ccas/counting.hpp"
#include "ccas/graph.hpp"
#include "ccas/sct.hpp"

namespace ccas {

/// Frank-Wolfe iterate: one weight per vertex, plus the number of completed
/// iterations.
struct WeightVector {
  std::vector<double> r;
  std::size_t t = 0;

  double sum() const { return std::accumulate(r.begin(), r.end(), 0.0); }
  double max() const {
    return r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
  }
};

enum class Variant {
  basic,        // synchronous: every argmin reads the previous iterate
  simultaneous  // in-place: argmins see updates made earlier in the sweep
};

inline const char* variant_name(Variant variant) {
  return variant == Variant::basic ? "basic" : "ccas";
}

struct IterationConfig {
  std::size_t iterations = 100;
  Variant variant = Variant::simultaneous;
  PathOrdering ordering = PathOrdering::depth;
  std::uint64_t seed = 0;
};

struct Attribution {
  VertexId vertex = 0;
  Count count = 0;

  friend bool operator==(const Attribution&, const Attribution&) = default;
};

/// Step size for iteration t (t >= 1).
inline double step_size(std::size_t t) {
  return 2.0 / (static_cast<double>(t) + 2.0);
}

inline WeightVector init_weights(const CliqueCounts& counts, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("clique size k must be positive");
  WeightVector w;
  w.r.resize(counts.per_vertex.size());
  for (std::size_t v = 0; v < w.r.size(); ++v) {
    w.r[v] = static_cast<double>(counts.per_vertex[v]) / k;
  }
  return w;
}

namespace detail {

struct Member {
  double weight;
  VertexId vertex;
  bool hold;
};

}  // namespace detail

/// Splits the path's C(|P|, k-|H|) cliques among their minimum-weight members
/// (ties by smaller id) and calls emit(vertex, count) per non-zero share.
///
/// Walks V(Γ) in ascending (weight, id) order. A pivot reached before any hold
/// owns every clique that takes it together with pivots further along; the
/// first hold reached owns all that remain. When |H| = k the single clique H
/// is owned by the lightest hold even if the pivots run out first.
///
/// Requires |H| <= k and k - |H| <= |P|.
template <class F>
void for_each_attribution(std::span<const VertexId> holds,
                          std::span<const VertexId> pivots,
                          std::span<const double> weights, std::uint32_t k,
                          std::vector<detail::Member>& scratch, F&& emit) {
  scratch.clear();
  for (VertexId v : holds) scratch.push_back({weights[v], v, true});
  for (VertexId v : pivots) scratch.push_back({weights[v], v, false});
  std::sort(scratch.begin(), scratch.end(),
            [](const detail::Member& a, const detail::Member& b) {
              return a.weight != b.weight ? a.weight < b.weight
                                          : a.vertex < b.vertex;
            });

  const std::int64_t need = static_cast<std::int64_t>(k) - holds.size();
  std::uint64_t remaining = pivots.size();
  for (const detail::Member& m : scratch) {
    if (remaining == 0) break;
    if (m.hold) {
      Count share = binomial(remaining, need);
      if (share != 0) emit(m.vertex, share);
      return;
    }
    Count share = binomial(remaining - 1, need - 1);
    if (share != 0) emit(m.vertex, share);
    --remaining;
  }
  // Pivots exhausted with no hold reached. For |H| < k the shares above
  // already add up; for |H| = k the clique H itself is still unowned.
  if (need == 0 && !holds.empty()) {
    auto lightest = std::find_if(scratch.begin(), scratch.end(),
                                 [](const detail::Member& m) { return m.hold; });
    emit(lightest->vertex, Count{1});
  }
}

inline std::vector<Attribution> attribute_path(
    std::span<const VertexId> holds, std::span<const VertexId> pivots,
    std::span<const double> weights, std::uint32_t k) {
  std::vector<Attribution> out;
  std::vector<detail::Member> scratch;
  for_each_attribution(holds, pivots, weights, k, scratch,
                       [&](VertexId v, Count c) { out.push_back({v, c}); });
  return out;
}

inline std::vector<Attribution> attribute_path(const Sct& sct,
                                               const PathView& path,
                                               std::span<const double> weights) {
  PathVertices vertices = sct.expand(path);
  return attribute_path(vertices.holds, vertices.pivots, weights, sct.k());
}

/// Drops paths that encode no k-clique.
inline std::vector<PathView> contributing_paths(
    std::span<const PathView> paths, std::uint32_t k) {
  std::vector<PathView> out;
  out.reserve(paths.size());
  for (const PathView& path : paths) {
    if (contributes(path, k)) out.push_back(path);
  }
  return out;
}

/// One synchronous iteration. All argmins read `w`; the exact per-vertex
/// ownership counts are blended in after every path has been processed.
inline WeightVector iterate_basic(const Sct& sct,
                                  std::span<const PathView> paths,
                                  const WeightVector& w) {
  std::vector<Count> owned(w.r.size(), 0);
  PathVertices vertices;
  std::vector<detail::Member> scratch;
  for (const PathView& path : paths) {
    if (!contributes(path, sct.k())) continue;
    sct.expand(path, vertices);
    for_each_attribution(vertices.holds, vertices.pivots, w.r, sct.k(),
                         scratch, [&](VertexId v, Count c) {
                           owned[v] = checked_add(owned[v], c);
                         });
  }
  WeightVector next;
  next.t = w.t + 1;
  const double gamma = step_size(next.t);
  next.r.resize(w.r.size());
  for (std::size_t v = 0; v < w.r.size(); ++v) {
    next.r[v] = (1.0 - gamma) * w.r[v] + gamma * static_cast<double>(owned[v]);
  }
  return next;
}

/// One simultaneous iteration: scale everything by (1 - γ), then walk the
/// paths in the given order, adding γ·share to each owner immediately so later
/// paths see it.
inline WeightVector iterate_simultaneous(const Sct& sct,
                                         std::span<const PathView> paths,
                                         const WeightVector& w) {
  WeightVector next;
  next.t = w.t + 1;
  const double gamma = step_size(next.t);
  next.r.resize(w.r.size());
  for (std::size_t v = 0; v < w.r.size(); ++v) next.r[v] = (1.0 - gamma) * w.r[v];

  PathVertices vertices;
  std::vector<detail::Member> scratch;
  for (const PathView& path : paths) {
    if (!contributes(path, sct.k())) continue;
    sct.expand(path, vertices);
    for_each_attribution(vertices.holds, vertices.pivots, next.r, sct.k(),
                         scratch, [&](VertexId v, Count c) {
                           next.r[v] += gamma * static_cast<double>(c);
                         });
  }
  return next;
}

// ---------------------------------------------------------------------------
// End-to-end driver

struct RunStats {
  std::vector<double> iteration_ms;
  std::vector<double> gammas;  // gammas[i] is the step of iteration i + 1
  double max_weight = 0.0;
  Count delta = 0;
  Count total_cliques = 0;
  std::size_t core_vertices = 0;
  SctStats sct;
  std::string bound_report;
};

struct RunResult {
  WeightVector weights;  // indexed by the input graph's dense ids
  RunStats stats;
};

/// Iteration-count scale from the convergence bounds, as text. The bound is
/// asymptotic; the figure is Δ·|Ψk| (times √k for the simultaneous variant)
/// and the report states it as a multiple of 1/ε².
inline std::string bound_report(Variant variant, Count delta, Count total,
                                std::uint32_t k) {
  double scale = static_cast<double>(delta) * static_cast<double>(total);
  if (variant == Variant::simultaneous) scale *= std::sqrt(static_cast<double>(k));
  std::ostringstream out;
  out << "||r||_inf - rho_k* <= eps once t = Omega(" << scale
      << " / eps^2) [Delta=" << to_string(delta)
      << ", |Psi_k|=" << to_string(total);
  if (variant == Variant::simultaneous) out << ", sqrt(k)";
  out << ']';
  return out.str();
}

/// Holds the reduced graph, its SCT, the ordered path list and the current
/// iterate. `run` is a thin loop over `step`; the bench harness drives it
/// directly to take checkpoints.
class FrankWolfe {
 public:
  FrankWolfe(const Graph& g, std::uint32_t k, Variant variant,
             PathOrdering ordering, std::uint64_t seed)
      : full_size_(g.num_vertices()), k_(k) {
    if (k < 2) throw std::invalid_argument("clique size k must be at least 2");
    CoreInfo full_info = core_decomposition(g);
    core_ = core_restriction(g, full_info, k - 1);
    core_info_ = core_decomposition(core_.graph);
    sct_ = build_sct(core_.graph, k);
    counts_ = local_counts(sct_);
    initial_ = init_weights(counts_, k);
    reset(variant, ordering, seed);
  }

  /// Back to the initial weights under a new variant and path order. The
  /// tree and counts are kept.
  void reset(Variant variant, PathOrdering ordering, std::uint64_t seed) {
    variant_ = variant;
    weights_ = initial_;
    std::vector<PathView> ordered = reorder_paths(sct_, ordering, core_info_, seed);
    paths_ = contributing_paths(ordered, k_);
  }

  /// Runs one iteration and returns its step size.
  double step() {
    weights_ = variant_ == Variant::basic
                   ? iterate_basic(sct_, paths_, weights_)
                   : iterate_simultaneous(sct_, paths_, weights_);
    return step_size(weights_.t);
  }

  std::uint32_t k() const noexcept { return k_; }
  const Sct& sct() const noexcept { return sct_; }
  const CliqueCounts& core_counts() const noexcept { return counts_; }
  const InducedSubgraph& core() const noexcept { return core_; }
  std::span<const PathView> paths() const noexcept { return paths_; }
  const WeightVector& core_weights() const noexcept { return weights_; }

  /// The iterate scattered onto the input graph; peeled vertices get 0.
  WeightVector weights() const {
    WeightVector full;
    full.t = weights_.t;
    full.r.assign(full_size_, 0.0);
    for (std::size_t i = 0; i < core_.to_parent.size(); ++i) {
      full.r[core_.to_parent[i]] = weights_.r[i];
    }
    return full;
  }

  RunStats base_stats() const {
    RunStats stats;
    stats.delta = max_local(counts_);
    stats.total_cliques = counts_.total;
    stats.core_vertices = core_.graph.num_vertices();
    stats.sct = sct_.stats();
    stats.max_weight = weights_.max();
    stats.bound_report = bound_report(variant_, stats.delta, stats.total_cliques, k_);
    return stats;
  }

 private:
  std::size_t full_size_;
  std::uint32_t k_;
  Variant variant_ = Variant::simultaneous;
  InducedSubgraph core_;
  CoreInfo core_info_;
  Sct sct_;
  CliqueCounts counts_;
  WeightVector initial_;
  WeightVector weights_;
  std::vector<PathView> paths_;
};

inline RunResult run(const Graph& g, std::uint32_t k,
                     const IterationConfig& cfg) {
  FrankWolfe engine(g, k, cfg.variant, cfg.ordering, cfg.seed);
  RunStats stats = engine.base_stats();
  stats.iteration_ms.reserve(cfg.iterations);
  stats.gammas.reserve(cfg.iterations);
  for (std::size_t i = 0; i < cfg.iterations; ++i) {
    auto start = std::chrono::steady_clock::now();
    stats.gammas.push_back(engine.step());
    auto stop = std::chrono::steady_clock::now();
    stats.iteration_ms.push_back(
        std::chrono::duration<double, std::milli>(stop - start).count());
  }
  RunResult result;
  result.weights = engine.weights();
  stats.max_weight = result.weights.max();
  result.stats = std::move(stats);
  return result;
}

}  // namespace ccas
