#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ccas/errors.hpp"

namespace ccas {

using VertexId = std::uint32_t;
using ExternalId = std::uint64_t;
using Edge = std::pair<VertexId, VertexId>;

/// Undirected simple graph over dense ids 0..n-1. Adjacency lists are sorted
/// and symmetric. `external_id(v)` maps back to the id the vertex had in the
/// input file.
class Graph {
 public:
  Graph() = default;

  /// Builds from dense-id edges. Self-loops and duplicates are dropped. An
  /// empty `id_map` means the identity mapping.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<ExternalId> id_map = {}) {
    Graph g;
    g.adjacency_.assign(n, {});
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw std::out_of_range("edge endpoint outside vertex range");
      }
      if (u == v) continue;
      g.adjacency_[u].push_back(v);
      g.adjacency_[v].push_back(u);
    }
    std::size_t twice_m = 0;
    for (auto& nbrs : g.adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      nbrs.shrink_to_fit();
      twice_m += nbrs.size();
    }
    g.num_edges_ = twice_m / 2;
    if (id_map.empty()) {
      id_map.resize(n);
      for (std::size_t i = 0; i < n; ++i) id_map[i] = i;
    } else if (id_map.size() != n) {
      throw std::invalid_argument("id map size does not match vertex count");
    }
    g.id_map_ = std::move(id_map);
    return g;
  }

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[v];
  }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  bool adjacent(VertexId u, VertexId v) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  ExternalId external_id(VertexId v) const { return id_map_[v]; }
  const std::vector<ExternalId>& id_map() const noexcept { return id_map_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
      for (VertexId v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<ExternalId> id_map_;
  std::size_t num_edges_ = 0;
};

// ---------------------------------------------------------------------------
// Edge-list input

namespace detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

inline ExternalId parse_id(std::string_view token, std::size_t line) {
  ExternalId value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "malformed vertex id '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace detail

/// Reads a whitespace-separated edge list. Lines whose first non-blank
/// character is '#' or '%' are comments. External ids are assigned dense ids
/// in first-seen order.
inline Graph parse_edge_list(std::istream& in) {
  std::unordered_map<ExternalId, VertexId> dense;
  std::vector<ExternalId> id_map;
  std::vector<Edge> edges;
  auto intern = [&](ExternalId ext) {
    auto [it, inserted] =
        dense.try_emplace(ext, static_cast<VertexId>(id_map.size()));
    if (inserted) id_map.push_back(ext);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  bool any_edge = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.front().front() == '#' || tokens.front().front() == '%') continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 2 tokens, found " +
                                    std::to_string(tokens.size()));
    }
    ExternalId a = detail::parse_id(tokens[0], line_no);
    ExternalId b = detail::parse_id(tokens[1], line_no);
    VertexId u = intern(a);
    VertexId v = intern(b);
    edges.emplace_back(u, v);
    any_edge = true;
  }
  if (!any_edge) throw ParseError(line_no, "empty input: no edges");
  std::size_t n = id_map.size();
  return Graph::from_edges(n, edges, std::move(id_map));
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

// ---------------------------------------------------------------------------
// Core decomposition

struct CoreInfo {
  std::vector<std::uint32_t> core;
  std::uint32_t degeneracy = 0;
  /// Removal order of min-degree peeling; ties go to the smaller dense id.
  std::vector<VertexId> degeneracy_order;
};

inline CoreInfo core_decomposition(const Graph& g) {
  const std::size_t n = g.num_vertices();
  CoreInfo info;
  info.core.assign(n, 0);
  info.degeneracy_order.reserve(n);

  std::vector<std::uint32_t> deg(n);
  std::set<std::pair<std::uint32_t, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    queue.emplace(deg[v], v);
  }
  std::vector<bool> removed(n, false);
  std::uint32_t level = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    level = std::max(level, d);
    info.core[v] = level;
    removed[v] = true;
    info.degeneracy_order.push_back(v);
    for (VertexId u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({deg[u], u});
      --deg[u];
      queue.emplace(deg[u], u);
    }
  }
  info.degeneracy = level;
  return info;
}

/// Induced subgraph plus the map from its dense ids to the parent's.
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_parent;
};

/// `vertices` must be sorted and duplicate-free.
inline InducedSubgraph induced_subgraph(const Graph& g,
                                        std::span<const VertexId> vertices) {
  constexpr VertexId kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> local(g.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  std::vector<ExternalId> id_map;
  id_map.reserve(vertices.size());
  for (VertexId v : vertices) {
    id_map.push_back(g.external_id(v));
    for (VertexId u : g.neighbors(v)) {
      if (u > v && local[u] != kAbsent) edges.emplace_back(local[v], local[u]);
    }
  }
  InducedSubgraph sub;
  sub.graph = Graph::from_edges(vertices.size(), edges, std::move(id_map));
  sub.to_parent.assign(vertices.begin(), vertices.end());
  return sub;
}

/// Restriction to {v : cn(v) >= c}.
inline InducedSubgraph core_restriction(const Graph& g, const CoreInfo& info,
                                        std::uint32_t c) {
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (info.core[v] >= c) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

inline Graph k_core_subgraph(const Graph& g, const CoreInfo& info,
                             std::uint32_t c) {
  return core_restriction(g, info, c).graph;
}

}  // namespace ccas
