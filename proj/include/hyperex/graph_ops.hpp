#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace hyperex {

/// Marks a node with no path from the BFS source. Only ever produced by the
/// masked searches; always test for it before doing arithmetic.
inline constexpr std::int32_t kUnreachable = -1;

namespace detail {

// BFS that skips nodes whose removed[] flag is set. Sources must be present.
inline std::vector<std::int32_t> masked_bfs(const Graph& g, std::span<const NodeId> sources,
                                            const std::vector<char>* removed) {
  std::vector<std::int32_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  for (NodeId s : sources) {
    if (dist[s] == kUnreachable) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] != kUnreachable) continue;
      if (removed != nullptr && (*removed)[v]) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

inline void check_node(const Graph& g, NodeId u, const char* what) {
  if (u < 0 || u >= g.node_count()) {
    throw std::domain_error(std::string(what) + ": node " + std::to_string(u) + " out of range");
  }
}

// Shortest path from `from` to `to` using a distance vector rooted at `from`.
// Walks back from `to`, always stepping to the smallest-id neighbor one level closer.
inline std::vector<NodeId> walk_back(const Graph& g, const std::vector<std::int32_t>& dist,
                                     NodeId to) {
  std::vector<NodeId> path{to};
  NodeId x = to;
  while (dist[x] > 0) {
    for (NodeId y : g.neighbors(x)) {
      if (dist[y] == dist[x] - 1) {
        x = y;
        break;
      }
    }
    path.push_back(x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// Distances from `source` to every node of the (connected) graph.
inline std::vector<std::int32_t> bfs_distances(const Graph& g, NodeId source) {
  detail::check_node(g, source, "bfs_distances");
  const NodeId src[] = {source};
  return detail::masked_bfs(g, src, nullptr);
}

/// Distance from a node set: min over members. Multi-source BFS.
inline std::vector<std::int32_t> distances_from_set(const Graph& g, const NodeSet& sources) {
  return detail::masked_bfs(g, sources.ids(), nullptr);
}

/// Nodes grouped by BFS level from `source`.
inline std::vector<std::vector<NodeId>> bfs_levels(const Graph& g, NodeId source) {
  const auto dist = bfs_distances(g, source);
  std::vector<std::vector<NodeId>> levels;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (static_cast<std::size_t>(dist[v]) >= levels.size()) levels.resize(dist[v] + 1);
    levels[dist[v]].push_back(v);
  }
  return levels;
}

/// Fixed geodesic between two nodes.
struct CanonicalPath {
  std::vector<NodeId> nodes;

  std::int32_t length() const { return static_cast<std::int32_t>(nodes.size()) - 1; }
  NodeId front() const { return nodes.front(); }
  NodeId back() const { return nodes.back(); }
  NodeId operator[](std::size_t i) const { return nodes[i]; }

  EdgeList edges() const {
    EdgeList out;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) out.emplace_back(nodes[i], nodes[i + 1]);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const CanonicalPath&, const CanonicalPath&) = default;
};

/// Deterministic shortest u-v path: BFS from u, and from v backwards each
/// step picks the smallest-id neighbor on the previous level.
inline CanonicalPath canonical_shortest_path(const Graph& g, NodeId u, NodeId v) {
  detail::check_node(g, u, "canonical_shortest_path");
  detail::check_node(g, v, "canonical_shortest_path");
  if (u == v) throw std::domain_error("canonical_shortest_path: endpoints must differ");
  return CanonicalPath{detail::walk_back(g, bfs_distances(g, u), v)};
}

inline NodeSet ball(const Graph& g, NodeId u, std::int32_t radius) {
  if (radius < 0) throw std::domain_error("ball: negative radius");
  const auto dist = bfs_distances(g, u);
  std::vector<NodeId> members;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (dist[v] <= radius) members.push_back(v);
  }
  return NodeSet(std::move(members));
}

/// Nodes outside s with at least one neighbor inside s.
inline NodeSet boundary(const Graph& g, const NodeSet& s) {
  const auto in = s.mask(g.node_count());
  std::vector<char> out(g.node_count(), 0);
  for (NodeId u : s) {
    for (NodeId v : g.neighbors(u)) {
      if (!in[v]) out[v] = 1;
    }
  }
  return NodeSet::from_mask(out);
}

/// Edges with exactly one endpoint in s.
inline EdgeList cut_edge_set(const Graph& g, const NodeSet& s) {
  const auto in = s.mask(g.node_count());
  EdgeList out;
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) out.push_back(e);
  }
  return out;
}

inline std::int64_t volume(const Graph& g, const NodeSet& s) {
  std::int64_t vol = 0;
  for (NodeId u : s) vol += g.degree(u);
  return vol;
}

namespace detail {

inline void check_expansion_domain(const Graph& g, const NodeSet& s, const char* what) {
  const std::size_t half = static_cast<std::size_t>(g.node_count()) / 2;
  if (s.empty() || s.size() > half) {
    throw std::domain_error(std::string(what) + ": set size " + std::to_string(s.size()) +
                            " outside [1, " + std::to_string(half) + "]");
  }
  if (s.ids().back() >= g.node_count() || s.ids().front() < 0) {
    throw std::domain_error(std::string(what) + ": node id out of range");
  }
}

}  // namespace detail

/// |boundary(s)| / |s|, defined for 1 <= |s| <= floor(n/2).
inline Ratio node_expansion(const Graph& g, const NodeSet& s) {
  detail::check_expansion_domain(g, s, "node_expansion");
  return Ratio(static_cast<std::int64_t>(boundary(g, s).size()), static_cast<std::int64_t>(s.size()));
}

/// |cut(s)| / |s|.
inline Ratio edge_expansion(const Graph& g, const NodeSet& s) {
  detail::check_expansion_domain(g, s, "edge_expansion");
  return Ratio(static_cast<std::int64_t>(cut_edge_set(g, s).size()), static_cast<std::int64_t>(s.size()));
}

/// |cut(s)| / vol(s), vol being the degree sum.
inline Ratio normalized_expansion(const Graph& g, const NodeSet& s) {
  detail::check_expansion_domain(g, s, "normalized_expansion");
  return Ratio(static_cast<std::int64_t>(cut_edge_set(g, s).size()), volume(g, s));
}

struct DiameterPair {
  NodeId p = 0;
  NodeId q = 0;
  std::int32_t diameter = 0;
};

/// Lexicographically smallest (p, q), p < q, realizing the diameter. n BFS runs.
inline DiameterPair diameter_pair(const Graph& g) {
  DiameterPair best;
  for (NodeId p = 0; p < g.node_count(); ++p) {
    const auto dist = bfs_distances(g, p);
    for (NodeId q = p + 1; q < g.node_count(); ++q) {
      if (dist[q] > best.diameter) best = {p, q, dist[q]};
    }
  }
  return best;
}

/// All-pairs distance matrix, row-major.
inline std::vector<std::int32_t> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::int32_t> d(n * n);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto row = bfs_distances(g, u);
    std::copy(row.begin(), row.end(), d.begin() + u * n);
  }
  return d;
}

/// Induced subgraph G - C. Keeps node ids of the parent graph; removed nodes
/// are absent and distances across components are reported as nullopt.
class InducedSubgraph {
 public:
  InducedSubgraph(const Graph& g, const NodeSet& removed) : g_(&g), removed_(removed.mask(g.node_count())) {
    remaining_ = g.node_count() - static_cast<NodeId>(removed.size());
  }

  const Graph& parent() const { return *g_; }
  bool contains(NodeId u) const { return !removed_[u]; }
  NodeId node_count() const { return remaining_; }
  const std::vector<char>& removed_mask() const { return removed_; }

  /// Raw distances with kUnreachable for nodes not reachable (or removed).
  std::vector<std::int32_t> raw_distances(NodeId source) const {
    detail::check_node(*g_, source, "InducedSubgraph");
    if (removed_[source]) throw std::domain_error("InducedSubgraph: source node was removed");
    const NodeId src[] = {source};
    return detail::masked_bfs(*g_, src, &removed_);
  }

  std::vector<std::optional<std::int32_t>> distances_from(NodeId source) const {
    const auto raw = raw_distances(source);
    std::vector<std::optional<std::int32_t>> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != kUnreachable) out[i] = raw[i];
    }
    return out;
  }

  std::optional<std::int32_t> distance(NodeId u, NodeId v) const {
    if (removed_[v]) return std::nullopt;
    return distances_from(u)[v];
  }

  /// Ball in the subgraph; saturates at the reachable component.
  NodeSet ball(NodeId u, std::int32_t radius) const {
    const auto dist = raw_distances(u);
    std::vector<NodeId> members;
    for (NodeId v = 0; v < g_->node_count(); ++v) {
      if (dist[v] != kUnreachable && dist[v] <= radius) members.push_back(v);
    }
    return NodeSet(std::move(members));
  }

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<NodeSet> components() const {
    std::vector<char> seen(removed_);
    std::vector<NodeSet> out;
    for (NodeId u = 0; u < g_->node_count(); ++u) {
      if (seen[u]) continue;
      const auto dist = raw_distances(u);
      std::vector<NodeId> comp;
      for (NodeId v = 0; v < g_->node_count(); ++v) {
        if (dist[v] != kUnreachable) {
          comp.push_back(v);
          seen[v] = 1;
        }
      }
      out.emplace_back(std::move(comp));
    }
    return out;
  }

 private:
  const Graph* g_;
  std::vector<char> removed_;
  NodeId remaining_ = 0;
};

inline InducedSubgraph remove_nodes(const Graph& g, const NodeSet& c) {
  if (c.size() >= static_cast<std::size_t>(g.node_count())) {
    throw std::domain_error("remove_nodes: cannot remove every node");
  }
  return InducedSubgraph(g, c);
}

/// Max degree over nodes not in `excluded`; 0 when everything is excluded.
inline std::int32_t max_degree_excluding(const Graph& g, const NodeSet& excluded) {
  std::int32_t d = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (!excluded.contains(u)) d = std::max(d, g.degree(u));
  }
  return d;
}

/// True when every node has the same degree; returns that degree.
inline std::optional<std::int32_t> regular_degree(const Graph& g) {
  const std::int32_t d = g.degree(0);
  for (NodeId u = 1; u < g.node_count(); ++u) {
    if (g.degree(u) != d) return std::nullopt;
  }
  return d;
}

}  // namespace hyperex
