#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cut_families.hpp"
#include "flow.hpp"
#include "graph.hpp"
#include "graph_ops.hpp"
#include "hyperbolicity.hpp"

namespace hyperex {

enum class EhsscBranch { Loop, ShortestPath, NoSmallCuts };

inline const char* to_string(EhsscBranch b) {
  switch (b) {
    case EhsscBranch::Loop: return "loop";
    case EhsscBranch::ShortestPath: return "shortest-path";
    case EhsscBranch::NoSmallCuts: return "no-small-cuts";
  }
  return "?";
}

struct EhsscSolution {
  std::vector<EdgeId> hit_edges;               // sorted
  EhsscBranch branch = EhsscBranch::Loop;
  std::vector<std::vector<EdgeId>> iterations; // F_1 .. F_l of the loop
  NodeId s = 0;
  NodeId t = 0;
  std::int64_t k = 0;
  HalfInteger delta;
  bool delta_overridden = false;
  std::int32_t d_excl = 0;
  bool degree_overridden = false;
  std::int32_t exclusion_radius = 0;  // floor(35 delta)
  NodeSet degree_excluded;            // {s, t} and B(s, floor(35 delta))
  std::int64_t threshold = 0;         // d_excl^(floor(12 delta)+1), saturated
  bool threshold_overridden = false;
};

struct EhsscOptions {
  std::optional<HalfInteger> delta;
  std::optional<std::int32_t> max_degree;
  std::optional<std::int64_t> threshold_override;
};

/// Minimum s-t cut value with `hit` edges uncuttable and the rest unit;
/// nullopt when the hit edges connect s and t.
inline std::optional<std::int64_t> constrained_min_cut(const Graph& g, NodeId s, NodeId t,
                                                       const std::vector<EdgeId>& hit) {
  CapacityMap cap = uniform_capacities(g, 1);
  for (EdgeId e : hit) cap[e] = Capacity::infinite();
  const FlowResult f = max_flow(g, cap, s, t);
  if (f.infinite) return std::nullopt;
  return f.value;
}

/// True iff no s-t cut with at most k edges avoids the hit set.
inline bool ehssc_valid(const Graph& g, NodeId s, NodeId t, std::int64_t k, const std::vector<EdgeId>& hit) {
  const auto v = constrained_min_cut(g, s, t, hit);
  return !v || *v > k;
}

inline EhsscSolution ehssc_approx(const Graph& g, NodeId s, NodeId t, std::int64_t k,
                                  const EhsscOptions& opts = {}) {
  detail::check_node(g, s, "ehssc_approx");
  detail::check_node(g, t, "ehssc_approx");
  if (s == t) throw std::domain_error("ehssc_approx: s equals t");
  if (k < 1 || k > static_cast<std::int64_t>(g.edge_count())) {
    throw std::domain_error("ehssc_approx: k must satisfy 0 < k <= m");
  }
  EhsscSolution sol;
  sol.s = s;
  sol.t = t;
  sol.k = k;
  sol.delta_overridden = opts.delta.has_value();
  sol.delta = opts.delta ? effective_delta(*opts.delta) : resolve_delta(g).delta;
  sol.exclusion_radius = static_cast<std::int32_t>(sol.delta.floor_times(35));
  sol.degree_excluded = set_union(ball(g, s, sol.exclusion_radius), NodeSet{s, t});
  sol.degree_overridden = opts.max_degree.has_value();
  sol.d_excl = opts.max_degree ? *opts.max_degree : max_degree_excluding(g, sol.degree_excluded);
  sol.threshold_overridden = opts.threshold_override.has_value();
  sol.threshold = opts.threshold_override ? *opts.threshold_override
                                          : saturating_pow(sol.d_excl, sol.delta.floor_times(12) + 1);

  CapacityMap cap = uniform_capacities(g, 1);
  FlowResult f = max_flow(g, cap, s, t);
  if (k <= sol.threshold) {
    sol.branch = EhsscBranch::Loop;
    while (!f.infinite && f.value <= k) {
      sol.iterations.push_back(f.min_cut);
      for (EdgeId e : f.min_cut) {
        cap[e] = Capacity::infinite();
        sol.hit_edges.push_back(e);
      }
      f = max_flow(g, cap, s, t);
    }
    std::sort(sol.hit_edges.begin(), sol.hit_edges.end());
  } else if (f.value > k) {
    // Nothing to hit: every s-t cut already has more than k edges.
    sol.branch = EhsscBranch::NoSmallCuts;
  } else {
    sol.branch = EhsscBranch::ShortestPath;
    for (const Edge& e : canonical_shortest_path(g, s, t).edges()) sol.hit_edges.push_back(*g.edge_id(e.u, e.v));
    std::sort(sol.hit_edges.begin(), sol.hit_edges.end());
  }
  return sol;
}

struct SharedEdges {
  std::int64_t count = 0;
  std::vector<EdgeId> edges;  // sorted
};

/// Edges appearing on more than r of the paths (with multiplicity).
inline SharedEdges count_shared_edges(const Graph& g, const std::vector<Path>& paths, std::int64_t r) {
  std::vector<std::int64_t> use(g.edge_count(), 0);
  for (const Path& p : paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const auto e = g.edge_id(p[i], p[i + 1]);
      if (!e) throw std::domain_error("count_shared_edges: path uses a non-edge");
      ++use[*e];
    }
  }
  SharedEdges out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(use.size()); ++e) {
    if (use[e] > r) out.edges.push_back(e);
  }
  out.count = static_cast<std::int64_t>(out.edges.size());
  return out;
}

struct UumvSolution {
  std::string method;                  // "ehssc" or "greedy"
  NodeId s = 0;
  NodeId t = 0;
  std::int64_t r = 0;
  std::int64_t kappa = 0;
  std::vector<Path> paths;
  SharedEdges shared;
  std::optional<EhsscSolution> ehssc;  // inner call, for the reduction method
  std::int64_t hitting_set_size() const { return ehssc ? static_cast<std::int64_t>(ehssc->hit_edges.size()) : 0; }
};

/// Routes kappa paths with capacity r off the hit set and no limit on it.
inline UumvSolution route_with_hitting_set(const Graph& g, NodeId s, NodeId t, std::int64_t r, std::int64_t kappa,
                                           const std::vector<EdgeId>& hit) {
  if (r < 1 || kappa <= r) throw std::domain_error("uumv: requires 0 < r < kappa");
  CapacityMap cap = uniform_capacities(g, r);
  for (EdgeId e : hit) cap[e] = Capacity::infinite();
  const FlowResult f = max_flow(g, cap, s, t, kappa);
  if (f.value < kappa) {
    throw std::logic_error("uumv: flow " + std::to_string(f.value) + " below kappa; hit set is not valid");
  }
  UumvSolution sol;
  sol.method = "ehssc";
  sol.s = s;
  sol.t = t;
  sol.r = r;
  sol.kappa = kappa;
  sol.paths = decompose_paths(g, f, kappa);
  sol.shared = count_shared_edges(g, sol.paths, r);
  for (EdgeId e : sol.shared.edges) {
    if (!std::binary_search(hit.begin(), hit.end(), e)) {
      throw std::logic_error("uumv: shared edge outside the hit set");
    }
  }
  return sol;
}

inline std::int64_t uumv_cut_size(std::int64_t r, std::int64_t kappa) { return (kappa + r - 1) / r - 1; }

inline UumvSolution uumv_approx(const Graph& g, NodeId s, NodeId t, std::int64_t r, std::int64_t kappa,
                                const EhsscOptions& opts = {}) {
  if (r < 1 || kappa <= r) throw std::domain_error("uumv_approx: requires 0 < r < kappa");
  const std::int64_t k = std::min<std::int64_t>(uumv_cut_size(r, kappa), static_cast<std::int64_t>(g.edge_count()));
  EhsscSolution inner = ehssc_approx(g, s, t, k, opts);
  UumvSolution sol = route_with_hitting_set(g, s, t, r, kappa, inner.hit_edges);
  sol.ehssc = std::move(inner);
  return sol;
}

/// Greedy baseline: each new path minimizes (newly shared edges, length)
/// given the paths already chosen; remaining ties go to smaller node ids.
inline UumvSolution greedy_uumv(const Graph& g, NodeId s, NodeId t, std::int64_t r, std::int64_t kappa) {
  detail::check_node(g, s, "greedy_uumv");
  detail::check_node(g, t, "greedy_uumv");
  if (s == t) throw std::domain_error("greedy_uumv: s equals t");
  if (r < 1 || kappa <= r) throw std::domain_error("greedy_uumv: requires 0 < r < kappa");
  const NodeId n = g.node_count();
  using Key = std::pair<std::int64_t, std::int64_t>;  // (new shared edges, length)
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> use(g.edge_count(), 0);
  UumvSolution sol;
  sol.method = "greedy";
  sol.s = s;
  sol.t = t;
  sol.r = r;
  sol.kappa = kappa;
  for (std::int64_t it = 0; it < kappa; ++it) {
    auto cost = [&](EdgeId e) -> std::int64_t { return use[e] == r ? 1 : 0; };
    std::vector<Key> key(n, Key{kInf, kInf});
    std::priority_queue<std::pair<Key, NodeId>, std::vector<std::pair<Key, NodeId>>, std::greater<>> pq;
    key[t] = {0, 0};
    pq.push({key[t], t});
    while (!pq.empty()) {
      const auto [k, u] = pq.top();
      pq.pop();
      if (k != key[u]) continue;
      auto nb = g.neighbors(u);
      auto ids = g.incident_edges(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const Key cand{k.first + cost(ids[i]), k.second + 1};
        if (cand < key[nb[i]]) {
          key[nb[i]] = cand;
          pq.push({cand, nb[i]});
        }
      }
    }
    Path p{s};
    NodeId u = s;
    while (u != t) {
      auto nb = g.neighbors(u);
      auto ids = g.incident_edges(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const Key via{key[nb[i]].first + cost(ids[i]), key[nb[i]].second + 1};
        if (key[nb[i]].first != kInf && via == key[u]) {
          ++use[ids[i]];
          u = nb[i];
          break;
        }
      }
      p.push_back(u);
    }
    sol.paths.push_back(std::move(p));
  }
  sol.shared = count_shared_edges(g, sol.paths, r);
  return sol;
}

}  // namespace hyperex
