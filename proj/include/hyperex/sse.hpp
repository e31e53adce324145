#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "graph.hpp"
#include "graph_ops.hpp"
#include "hyperbolicity.hpp"
#include "rational.hpp"
#include "witness.hpp"

namespace hyperex {

struct SseSolution {
  NodeSet set;
  Ratio phi;
  Ratio h;
  std::string branch;  // ball | level-block | disconnected-ball | greedy-growth | shortfall
  bool shortfall = false;

  Ratio epsilon;
  Ratio zeta;
  NodeId n = 0;
  std::int32_t d = 0;
  std::int64_t size_cap = 0;           // floor(zeta n)
  HalfInteger delta;
  bool delta_overridden = false;
  std::int32_t target_dist = 0;        // largest k with d^k <= n
  NodeId p = 0;
  NodeId q = 0;
  std::int32_t dist = 0;
  bool pair_fallback = false;          // no pair at the target distance
  double alpha = 0;                    // 1 / (14 sqrt(Delta) log 2d)
  std::int32_t cylinder_radius = 0;    // ceil(alpha Delta)
  std::int32_t ball_limit = 0;         // floor(Delta/3) - ceil(alpha Delta)
  bool cylinder_used = false;
  bool cylinder_disconnects = false;
  std::int64_t block_length = 0;       // ceil((8/eps) ln n)
  bool degree_window_ok = false;       // d <= 2^(log^(1/3) n)
};

struct SseOptions {
  std::optional<HalfInteger> delta;
  std::optional<std::int32_t> max_degree;  // must equal the regular degree if given
};

namespace detail {

struct SseCandidate {
  NodeSet set;
  std::int64_t cut = 0;
  std::int64_t bnd = 0;
};

inline SseCandidate sse_measure(const Graph& g, NodeSet s) {
  SseCandidate c;
  c.cut = static_cast<std::int64_t>(cut_edge_set(g, s).size());
  c.bnd = static_cast<std::int64_t>(boundary(g, s).size());
  c.set = std::move(s);
  return c;
}

}  // namespace detail

/// Small-set expansion on a d-regular graph: ball growth from one end of a
/// log_d n geodesic, then BFS-level blocks in G minus a cylinder, then the
/// disconnected-ball case. When none of those qualifies, greedy growth from
/// a few seeds is tried before reporting a shortfall.
inline SseSolution sse_solve(const Graph& g, const Ratio& epsilon, const Ratio& zeta, const SseOptions& opts = {}) {
  if (epsilon <= Ratio(0) || epsilon > Ratio(1)) throw std::domain_error("sse_solve: epsilon must lie in (0,1]");
  if (zeta <= Ratio(0) || zeta >= Ratio(1, 2)) throw std::domain_error("sse_solve: zeta must lie in (0,1/2)");
  const auto reg = regular_degree(g);
  if (!reg) throw std::domain_error("sse_solve: graph is not regular");
  if (opts.max_degree && *opts.max_degree != *reg) {
    throw std::domain_error("sse_solve: degree override differs from the regular degree");
  }
  const NodeId n = g.node_count();
  SseSolution sol;
  sol.epsilon = epsilon;
  sol.zeta = zeta;
  sol.n = n;
  sol.d = *reg;
  sol.size_cap = zeta.num() * n / zeta.den();
  if (sol.size_cap < 1 || sol.d < 2) throw std::domain_error("sse_solve: requires floor(zeta n) >= 1 and d >= 2");
  sol.delta_overridden = opts.delta.has_value();
  sol.delta = opts.delta ? effective_delta(*opts.delta) : resolve_delta(g).delta;
  const double logn = std::log2(static_cast<double>(n));
  sol.degree_window_ok = std::log2(static_cast<double>(sol.d)) <= std::cbrt(logn);

  for (std::int64_t pw = sol.d; pw <= n; pw *= sol.d) ++sol.target_dist;
  sol.target_dist = std::max(sol.target_dist, 1);

  // First pair at the target distance, else the closest farther one, else
  // the diameter pair.
  {
    std::optional<std::tuple<std::int32_t, NodeId, NodeId>> best;
    for (NodeId a = 0; a < n && !(best && std::get<0>(*best) == sol.target_dist); ++a) {
      const auto da = bfs_distances(g, a);
      for (NodeId b = a + 1; b < n; ++b) {
        if (da[b] < sol.target_dist) continue;
        if (!best || da[b] < std::get<0>(*best)) best = std::make_tuple(da[b], a, b);
        if (da[b] == sol.target_dist) break;
      }
    }
    if (best) {
      std::tie(sol.dist, sol.p, sol.q) = *best;
    } else {
      const DiameterPair dp = diameter_pair(g);
      sol.p = dp.p;
      sol.q = dp.q;
      sol.dist = dp.diameter;
    }
    sol.pair_fallback = sol.dist != sol.target_dist;
  }
  const std::int32_t D = sol.dist;
  sol.alpha = 1.0 / (14.0 * std::sqrt(static_cast<double>(D)) * std::log2(2.0 * sol.d));
  sol.cylinder_radius = std::max(1, static_cast<std::int32_t>(std::ceil(sol.alpha * D)));
  sol.ball_limit = D / 3 - sol.cylinder_radius;
  sol.block_length = static_cast<std::int64_t>(
      std::ceil(8.0 / epsilon.to_double() * std::log(static_cast<double>(n))));
  sol.block_length = std::max<std::int64_t>(sol.block_length, 1);

  const std::int64_t d = sol.d;
  auto finish = [&](const detail::SseCandidate& c, const std::string& branch) {
    sol.set = c.set;
    const std::int64_t sz = static_cast<std::int64_t>(c.set.size());
    sol.phi = Ratio(c.cut, d * sz);
    sol.h = Ratio(c.bnd, sz);
    sol.branch = branch;
    return sol;
  };
  auto fits = [&](std::size_t size) { return size >= 1 && static_cast<std::int64_t>(size) <= sol.size_cap; };

  // Ball growth.
  for (std::int32_t r = 0; r <= sol.ball_limit; ++r) {
    NodeSet b = ball(g, sol.p, r);
    if (!fits(b.size())) break;
    auto c = detail::sse_measure(g, std::move(b));
    if (Ratio(c.bnd, static_cast<std::int64_t>(c.set.size())) <= epsilon) return finish(c, "ball");
  }

  if (D > 6 && 4 * sol.cylinder_radius < D) {
    sol.cylinder_used = true;
    const Cylinder cyl = cylinder(g, sol.p, sol.q, sol.cylinder_radius);
    const InducedSubgraph h(g, cyl.nodes);
    const auto hp = h.raw_distances(sol.p);
    sol.cylinder_disconnects = hp[sol.q] == kUnreachable;
    if (!sol.cylinder_disconnects) {
      const std::int32_t last = hp[sol.q] / 2;
      std::vector<std::vector<NodeId>> levels(last + 1);
      for (NodeId v = 0; v < n; ++v) {
        if (hp[v] != kUnreachable && hp[v] <= last) levels[hp[v]].push_back(v);
      }
      std::optional<detail::SseCandidate> best;
      for (std::int32_t i = 0; i <= last; ++i) {
        if (!fits(levels[i].size())) continue;
        auto c = detail::sse_measure(g, NodeSet(levels[i]));
        if (Ratio(c.bnd, static_cast<std::int64_t>(c.set.size())) > epsilon) continue;
        if (!best || c.set.size() < best->set.size()) best = std::move(c);
      }
      if (best) return finish(*best, "level-block");
    } else if (sol.ball_limit >= 0) {
      NodeSet b = ball(g, sol.p, sol.ball_limit);
      if (fits(b.size())) {
        auto c = detail::sse_measure(g, std::move(b));
        if (Ratio(c.cut, d * static_cast<std::int64_t>(c.set.size())) <= epsilon) return finish(c, "disconnected-ball");
      }
    }
  }

  // Greedy growth: add the outside node with the most edges into the set.
  std::vector<NodeId> seeds{sol.p, sol.q};
  for (NodeId v = 0; v < std::min<NodeId>(n, 64); ++v) {
    if (v != sol.p && v != sol.q) seeds.push_back(v);
  }
  std::optional<std::pair<Ratio, NodeSet>> best;
  for (NodeId seed : seeds) {
    std::vector<char> in(n, 0);
    std::vector<std::int32_t> into(n, 0);
    std::vector<NodeId> members;
    std::int64_t cut = 0;
    NodeId u = seed;
    while (true) {
      in[u] = 1;
      members.push_back(u);
      cut += d - 2 * into[u];
      for (NodeId w : g.neighbors(u)) ++into[w];
      const Ratio phi(cut, d * static_cast<std::int64_t>(members.size()));
      if (!best || phi < best->first || (phi == best->first && members.size() < best->second.size())) {
        best = std::make_pair(phi, NodeSet(members));
      }
      if (static_cast<std::int64_t>(members.size()) >= sol.size_cap) break;
      NodeId next = -1;
      for (NodeId v = 0; v < n; ++v) {
        if (!in[v] && (next < 0 || into[v] > into[next])) next = v;
      }
      if (next < 0) break;
      u = next;
    }
  }
  auto c = detail::sse_measure(g, best->second);
  if (best->first <= epsilon) return finish(c, "greedy-growth");
  sol.shortfall = true;
  return finish(c, "shortfall");
}

}  // namespace hyperex
