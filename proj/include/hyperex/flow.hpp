#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph_ops.hpp"

namespace hyperex {

/// Edge capacity: a positive integer, or symbolic infinity (uncuttable).
class Capacity {
 public:
  static Capacity finite(std::int64_t v) {
    if (v < 1) throw std::domain_error("capacity must be >= 1");
    return Capacity(v, false);
  }
  static Capacity infinite() { return Capacity(0, true); }

  bool is_infinite() const { return infinite_; }
  std::int64_t value() const { return value_; }

  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  Capacity(std::int64_t v, bool inf) : value_(v), infinite_(inf) {}
  std::int64_t value_;
  bool infinite_;
};

/// Capacity per edge id.
using CapacityMap = std::vector<Capacity>;

inline CapacityMap uniform_capacities(const Graph& g, std::int64_t c) {
  return CapacityMap(g.edge_count(), Capacity::finite(c));
}

using Path = std::vector<NodeId>;

struct FlowResult {
  NodeId source = 0;
  NodeId sink = 0;
  bool infinite = false;      // some s-t path uses only infinite edges
  std::int64_t value = 0;     // meaningful when !infinite
  bool limit_reached = false; // stopped at the requested limit
  // Signed flow per edge id: positive means edge.u -> edge.v.
  std::vector<std::int64_t> edge_flow;
  // Residual-reachable side of s and the finite edges leaving it. When the
  // flow is maximum this is a minimum cut whose capacity equals value.
  NodeSet source_side;
  std::vector<EdgeId> min_cut;
};

namespace detail {

inline bool residual_positive(const Capacity& c, std::int64_t f, bool forward) {
  if (c.is_infinite()) return true;
  return forward ? f < c.value() : -f < c.value();
}

inline std::optional<std::int64_t> residual(const Capacity& c, std::int64_t f, bool forward) {
  if (c.is_infinite()) return std::nullopt;
  return forward ? c.value() - f : c.value() + f;
}

// Nodes reachable from s through arcs with positive residual capacity.
inline std::vector<char> residual_reachable(const Graph& g, const CapacityMap& cap,
                                            const std::vector<std::int64_t>& flow, NodeId s,
                                            std::vector<std::pair<NodeId, EdgeId>>* parent) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> queue{s};
  seen[s] = 1;
  if (parent) parent->assign(g.node_count(), {-1, -1});
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    auto nb = g.neighbors(u);
    auto ids = g.incident_edges(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const NodeId v = nb[i];
      if (seen[v]) continue;
      const EdgeId e = ids[i];
      const bool forward = g.edge(e).u == u;
      if (!residual_positive(cap[e], flow[e], forward)) continue;
      seen[v] = 1;
      if (parent) (*parent)[v] = {u, e};
      queue.push_back(v);
    }
  }
  return seen;
}

}  // namespace detail

/// Integral maximum flow on the undirected graph (each edge is a pair of
/// opposite arcs sharing one capacity). Shortest augmenting paths, BFS in
/// ascending neighbor order. With `limit`, augmentation stops once the flow
/// value reaches it; infinite paths then carry exactly the remainder.
inline FlowResult max_flow(const Graph& g, const CapacityMap& cap, NodeId s, NodeId t,
                           std::optional<std::int64_t> limit = std::nullopt) {
  detail::check_node(g, s, "max_flow");
  detail::check_node(g, t, "max_flow");
  if (s == t) throw std::domain_error("max_flow: source equals sink");
  if (cap.size() != g.edge_count()) throw std::domain_error("max_flow: capacity map size mismatch");

  FlowResult r;
  r.source = s;
  r.sink = t;
  r.edge_flow.assign(g.edge_count(), 0);
  std::vector<std::pair<NodeId, EdgeId>> parent;

  while (!limit || r.value < *limit) {
    const auto seen = detail::residual_reachable(g, cap, r.edge_flow, s, &parent);
    if (!seen[t]) break;
    std::optional<std::int64_t> bottleneck;
    for (NodeId v = t; v != s; v = parent[v].first) {
      const auto [u, e] = parent[v];
      const auto res = detail::residual(cap[e], r.edge_flow[e], g.edge(e).u == u);
      if (res && (!bottleneck || *res < *bottleneck)) bottleneck = res;
    }
    if (limit) {
      const std::int64_t remaining = *limit - r.value;
      if (!bottleneck || *bottleneck > remaining) bottleneck = remaining;
    }
    if (!bottleneck) {
      r.infinite = true;
      break;
    }
    for (NodeId v = t; v != s; v = parent[v].first) {
      const auto [u, e] = parent[v];
      r.edge_flow[e] += (g.edge(e).u == u) ? *bottleneck : -*bottleneck;
    }
    r.value += *bottleneck;
  }
  r.limit_reached = limit.has_value() && r.value >= *limit;

  if (!r.infinite) {
    const auto side = detail::residual_reachable(g, cap, r.edge_flow, s, nullptr);
    r.source_side = NodeSet::from_mask(side);
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
      const Edge& ed = g.edge(e);
      if (side[ed.u] != side[ed.v]) r.min_cut.push_back(e);
    }
  }
  return r;
}

/// Sum of capacities of a cut; nullopt when it contains an infinite edge.
inline std::optional<std::int64_t> cut_capacity(const CapacityMap& cap, const std::vector<EdgeId>& cut) {
  std::int64_t total = 0;
  for (EdgeId e : cut) {
    if (cap[e].is_infinite()) return std::nullopt;
    total += cap[e].value();
  }
  return total;
}

namespace detail {

// Cancels every directed cycle of the positive-flow arc graph.
inline void cancel_flow_cycles(const Graph& g, std::vector<std::int64_t>& flow) {
  const NodeId n = g.node_count();
  auto out_flow = [&](NodeId u, EdgeId e) -> std::int64_t {
    return g.edge(e).u == u ? flow[e] : -flow[e];
  };
  bool found = true;
  while (found) {
    found = false;
    std::vector<char> color(n, 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::pair<NodeId, EdgeId>> via(n, {-1, -1});
    for (NodeId root = 0; root < n && !found; ++root) {
      if (color[root]) continue;
      std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
      color[root] = 1;
      while (!stack.empty() && !found) {
        auto& [u, idx] = stack.back();
        auto nb = g.neighbors(u);
        auto ids = g.incident_edges(u);
        if (idx == nb.size()) {
          color[u] = 2;
          stack.pop_back();
          continue;
        }
        const NodeId v = nb[idx];
        const EdgeId e = ids[idx];
        ++idx;
        if (out_flow(u, e) <= 0) continue;
        if (color[v] == 1) {
          // Cycle v -> ... -> u -> v.
          std::vector<std::pair<NodeId, EdgeId>> arcs{{u, e}};
          for (NodeId x = u; x != v; x = via[x].first) arcs.push_back({via[x].first, via[x].second});
          std::int64_t m = std::numeric_limits<std::int64_t>::max();
          for (auto [from, id] : arcs) m = std::min(m, out_flow(from, id));
          for (auto [from, id] : arcs) flow[id] += (g.edge(id).u == from) ? -m : m;
          found = true;
        } else if (color[v] == 0) {
          color[v] = 1;
          via[v] = {u, e};
          stack.push_back({v, 0});
        }
      }
    }
  }
}

}  // namespace detail

/// Splits an integral flow into kappa unit s-t paths. Flow cycles are
/// cancelled first; each path follows the smallest-id neighbor carrying
/// positive flow. No finite edge is used by more paths than its flow.
inline std::vector<Path> decompose_paths(const Graph& g, const FlowResult& flow, std::int64_t kappa) {
  if (flow.infinite) throw std::domain_error("decompose_paths: flow is unbounded; rerun max_flow with a limit");
  if (kappa < 0 || flow.value < kappa) {
    throw std::domain_error("decompose_paths: flow value " + std::to_string(flow.value) + " < kappa " +
                            std::to_string(kappa));
  }
  std::vector<std::int64_t> f = flow.edge_flow;
  detail::cancel_flow_cycles(g, f);
  std::vector<Path> paths;
  for (std::int64_t k = 0; k < kappa; ++k) {
    Path p{flow.source};
    NodeId u = flow.source;
    while (u != flow.sink) {
      auto nb = g.neighbors(u);
      auto ids = g.incident_edges(u);
      bool moved = false;
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const EdgeId e = ids[i];
        const std::int64_t out = g.edge(e).u == u ? f[e] : -f[e];
        if (out > 0) {
          f[e] += (g.edge(e).u == u) ? -1 : 1;
          u = nb[i];
          p.push_back(u);
          moved = true;
          break;
        }
      }
      if (!moved) throw std::logic_error("decompose_paths: flow conservation violated");
    }
    paths.push_back(std::move(p));
  }
  return paths;
}

}  // namespace hyperex
