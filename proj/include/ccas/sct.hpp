#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccas/graph.hpp"

namespace ccas {

// Succinct clique tree (SCT).
//
// A pivoted Bron-Kerbosch recursion tree where every node stores one vertex
// labelled `pivot` or `hold`. Each root-to-leaf path Γ encodes the cliques
// H(Γ) ∪ X for X ⊆ P(Γ), and every clique of the graph is encoded by exactly
// one path. The tree is built for a fixed k and pruned accordingly:
//
//   * a branch whose candidates plus path length cannot reach k is dropped;
//   * a branch that accumulates more than k holds is dropped.
//
// Nodes live in a flat arena in DFS (build) order.

using NodeIndex = std::uint32_t;

enum class Label : std::uint8_t { root, pivot, hold };

inline const char* label_name(Label label) {
  switch (label) {
    case Label::pivot: return "pivot";
    case Label::hold: return "hold";
    case Label::root: break;
  }
  return "root";
}

struct SctNode {
  VertexId vertex = 0;  // meaningless on the root
  Label label = Label::root;
  std::uint32_t depth = 0;
  NodeIndex parent = 0;
  std::vector<NodeIndex> children;
};

/// A root-to-leaf path, referenced by its leaf. Vertices are recovered by
/// walking parent links (see Sct::visit_path / Sct::expand).
struct PathView {
  NodeIndex leaf = 0;
  std::uint32_t holds = 0;
  std::uint32_t pivots = 0;
  /// Vertex of the path's depth-1 node (root child).
  VertexId top = 0;

  std::uint32_t depth() const noexcept { return holds + pivots; }
};

struct PathVertices {
  std::vector<VertexId> holds;
  std::vector<VertexId> pivots;  // root-to-leaf order
};

struct SctStats {
  std::size_t nodes = 0;  // including the root
  std::uint32_t max_depth = 0;
  std::size_t pruned_branches = 0;
  std::size_t paths = 0;
};

/// Switches for the construction-time pruning rules. Both are count-neutral;
/// turning them off exists for verification.
struct PruningOptions {
  bool candidate_size = true;  // |C| + depth < k
  bool hold_limit = true;      // more than k holds on the path
};

class Sct {
 public:
  std::uint32_t k() const noexcept { return k_; }
  std::size_t num_vertices() const noexcept { return num_vertices_; }
  const std::vector<SctNode>& nodes() const noexcept { return nodes_; }
  const SctNode& root() const { return nodes_.front(); }
  const SctStats& stats() const noexcept { return stats_; }

  /// Every root-to-leaf path in build (DFS) order.
  std::span<const PathView> paths() const noexcept { return paths_; }

  /// Calls f(vertex, label) for each vertex on the path, leaf first.
  template <class F>
  void visit_path(const PathView& path, F&& f) const {
    NodeIndex at = path.leaf;
    while (at != 0) {
      const SctNode& node = nodes_[at];
      f(node.vertex, node.label);
      at = node.parent;
    }
  }

  /// Fills `out` without reallocating when capacity suffices.
  void expand(const PathView& path, PathVertices& out) const {
    out.holds.clear();
    out.pivots.clear();
    visit_path(path, [&](VertexId v, Label label) {
      (label == Label::hold ? out.holds : out.pivots).push_back(v);
    });
    std::reverse(out.holds.begin(), out.holds.end());
    std::reverse(out.pivots.begin(), out.pivots.end());
  }

  PathVertices expand(const PathView& path) const {
    PathVertices out;
    expand(path, out);
    return out;
  }

 private:
  friend class SctBuilder;

  std::uint32_t k_ = 0;
  std::size_t num_vertices_ = 0;
  std::vector<SctNode> nodes_;
  std::vector<PathView> paths_;
  SctStats stats_;
};

class SctBuilder {
 public:
  SctBuilder(const Graph& g, std::uint32_t k, PruningOptions pruning)
      : g_(g), k_(k), pruning_(pruning), in_candidates_(g.num_vertices(), 0) {}

  Sct build() {
    sct_.k_ = k_;
    sct_.num_vertices_ = g_.num_vertices();
    sct_.nodes_.emplace_back();  // root
    std::vector<VertexId> all(g_.num_vertices());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    expand(0, all, 0, 0, 0);
    sct_.stats_.nodes = sct_.nodes_.size();
    sct_.stats_.paths = sct_.paths_.size();
    return std::move(sct_);
  }

 private:
  VertexId choose_pivot(const std::vector<VertexId>& candidates) {
    for (VertexId v : candidates) in_candidates_[v] = 1;
    VertexId best = candidates.front();
    std::size_t best_score = 0;
    bool first = true;
    for (VertexId v : candidates) {  // ascending, so '>' keeps the smaller id
      std::size_t score = 0;
      for (VertexId u : g_.neighbors(v)) score += in_candidates_[u];
      if (first || score > best_score) {
        best = v;
        best_score = score;
        first = false;
      }
    }
    for (VertexId v : candidates) in_candidates_[v] = 0;
    return best;
  }

  std::vector<VertexId> intersect(const std::vector<VertexId>& candidates,
                                  VertexId v) const {
    auto nbrs = g_.neighbors(v);
    std::vector<VertexId> out;
    out.reserve(std::min(candidates.size(), nbrs.size()));
    std::set_intersection(candidates.begin(), candidates.end(), nbrs.begin(),
                          nbrs.end(), std::back_inserter(out));
    return out;
  }

  // Expands the node `at`, whose path has `depth` vertices, over `candidates`.
  void expand(NodeIndex at, const std::vector<VertexId>& candidates,
              std::uint32_t depth, std::uint32_t holds, VertexId top) {
    if (candidates.empty()) {
      if (at != 0) {
        PathView path;
        path.leaf = at;
        path.holds = holds;
        path.pivots = depth - holds;
        path.top = top;
        sct_.paths_.push_back(path);
      }
      return;
    }

    VertexId pivot = choose_pivot(candidates);
    child(at, pivot, Label::pivot, intersect(candidates, pivot), depth, holds,
          top);

    // Holds are the non-neighbours of the pivot. Each hold branch excludes the
    // holds processed before it, which is what keeps paths disjoint.
    std::vector<VertexId> done;
    for (VertexId h : candidates) {
      if (h == pivot || g_.adjacent(pivot, h)) continue;
      std::vector<VertexId> next = intersect(candidates, h);
      if (!done.empty()) {
        std::vector<VertexId> filtered;
        filtered.reserve(next.size());
        std::set_difference(next.begin(), next.end(), done.begin(), done.end(),
                            std::back_inserter(filtered));
        next.swap(filtered);
      }
      child(at, h, Label::hold, std::move(next), depth, holds + 1, top);
      done.push_back(h);  // increasing, stays sorted
    }
  }

  void child(NodeIndex parent, VertexId v, Label label,
             std::vector<VertexId> candidates, std::uint32_t parent_depth,
             std::uint32_t holds, VertexId top) {
    const std::uint32_t depth = parent_depth + 1;
    if (pruning_.hold_limit && holds > k_) {
      ++sct_.stats_.pruned_branches;
      return;
    }
    if (pruning_.candidate_size && candidates.size() + depth < k_) {
      ++sct_.stats_.pruned_branches;
      return;
    }
    const NodeIndex index = static_cast<NodeIndex>(sct_.nodes_.size());
    SctNode node;
    node.vertex = v;
    node.label = label;
    node.depth = depth;
    node.parent = parent;
    sct_.nodes_.push_back(std::move(node));
    sct_.nodes_[parent].children.push_back(index);
    sct_.stats_.max_depth = std::max(sct_.stats_.max_depth, depth);

    const bool had_candidates = !candidates.empty();
    expand(index, candidates, depth, holds, parent == 0 ? v : top);

    // Every child was pruned: the node is a dead end that encodes no k-clique
    // (its path is shorter than k). It is the last node in the arena, so
    // dropping it keeps the arena contiguous.
    if (had_candidates && sct_.nodes_[index].children.empty()) {
      sct_.nodes_.pop_back();
      sct_.nodes_[parent].children.pop_back();
      ++sct_.stats_.pruned_branches;
    }
  }

  const Graph& g_;
  std::uint32_t k_;
  PruningOptions pruning_;
  std::vector<std::uint8_t> in_candidates_;
  Sct sct_;
};

/// Builds the SCT of `g` for clique size k. `g` is expected to be the
/// (k-1)-core already; the result is correct on any graph.
inline Sct build_sct(const Graph& g, std::uint32_t k,
                     PruningOptions pruning = {}) {
  if (k < 2) throw std::invalid_argument("clique size k must be at least 2");
  return SctBuilder(g, k, pruning).build();
}

inline std::span<const PathView> iter_paths(const Sct& sct) {
  return sct.paths();
}

// ---------------------------------------------------------------------------
// Path orderings

enum class PathOrdering { build, random, depth, degeneracy };

inline const char* ordering_name(PathOrdering ordering) {
  switch (ordering) {
    case PathOrdering::build: return "build";
    case PathOrdering::random: return "random";
    case PathOrdering::depth: return "depth";
    case PathOrdering::degeneracy: return "degeneracy";
  }
  return "build";
}

/// Returns the paths of `sct` in the requested order. `info` must describe the
/// graph the tree was built from. Sorts are stable, so ties keep build order.
inline std::vector<PathView> reorder_paths(const Sct& sct,
                                           PathOrdering ordering,
                                           const CoreInfo& info,
                                           std::uint64_t seed = 0) {
  std::vector<PathView> out(sct.paths().begin(), sct.paths().end());
  switch (ordering) {
    case PathOrdering::build:
      break;
    case PathOrdering::random: {
      std::mt19937_64 rng(seed);
      std::shuffle(out.begin(), out.end(), rng);
      break;
    }
    case PathOrdering::depth:
      std::stable_sort(out.begin(), out.end(),
                       [](const PathView& a, const PathView& b) {
                         return a.depth() > b.depth();
                       });
      break;
    case PathOrdering::degeneracy:
      std::stable_sort(out.begin(), out.end(),
                       [&](const PathView& a, const PathView& b) {
                         return info.core[a.top] > info.core[b.top];
                       });
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Debug dump: header line, then one "depth,vertex,label" line per node in
// preorder. Vertices are written as external ids. The root is not written.

inline constexpr const char* kSctDumpHeader = "# sct-dump v1";

inline void write_sct_dump(std::ostream& out, const Sct& sct, const Graph& g) {
  out << kSctDumpHeader << " k=" << sct.k()
      << " nodes=" << sct.stats().nodes << '\n';
  // Arena order is preorder already.
  for (std::size_t i = 1; i < sct.nodes().size(); ++i) {
    const SctNode& node = sct.nodes()[i];
    out << node.depth << ',' << g.external_id(node.vertex) << ','
        << label_name(node.label) << '\n';
  }
}

}  // namespace ccas
