#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "graph.hpp"
#include "graph_ops.hpp"
#include "hyperbolicity.hpp"
#include "rational.hpp"

namespace hyperex {

/// Nodes at exact distance `radius` from the middle third of the canonical
/// p-q geodesic.
struct Cylinder {
  CanonicalPath segment;  // p' .. q'
  std::int32_t radius = 0;
  NodeSet nodes;
};

/// Splits the canonical p-q path at floor(Delta/3) and 2*floor(Delta/3); the
/// q-side piece absorbs the remainder. Requires Delta > 6 and
/// 1 <= radius < Delta/4.
inline Cylinder cylinder(const Graph& g, NodeId p, NodeId q, std::int32_t radius) {
  const CanonicalPath path = canonical_shortest_path(g, p, q);
  const std::int32_t dist = path.length();
  if (dist <= 6) {
    throw std::domain_error("cylinder: requires dist(p,q) > 6, got " + std::to_string(dist));
  }
  if (radius < 1 || 4 * radius >= dist) {
    throw std::domain_error("cylinder: radius " + std::to_string(radius) + " outside [1, Delta/4) with Delta = " +
                            std::to_string(dist));
  }
  const std::int32_t third = dist / 3;
  Cylinder c;
  c.radius = radius;
  c.segment.nodes.assign(path.nodes.begin() + third, path.nodes.begin() + 2 * third + 1);
  const auto d = distances_from_set(g, NodeSet(c.segment.nodes));
  std::vector<NodeId> members;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (d[v] == radius) members.push_back(v);
  }
  c.nodes = NodeSet(std::move(members));
  return c;
}

/// Where a family member came from.
struct WitnessOrigin {
  std::int32_t cylinder_radius = -1;  // -1: ball in G; otherwise ball in G minus that cylinder
  std::int32_t ball_radius = 0;
};

struct WitnessFamily {
  NodeId p = 0;
  NodeId q = 0;
  NodeId anchor = 0;
  std::vector<NodeSet> subsets;       // strictly increasing
  std::vector<Ratio> expansions;      // node expansion in G, parallel to subsets
  std::vector<WitnessOrigin> origins;
  BoundValue bound;                   // family bound (outward rounded)
  BoundValue ball_term;               // 8 ln(n/2) / Delta
  BoundValue cylinder_term;           // max{(1/Delta)^(1-mu), 500 ln n / (...)}

  // Parameters actually used.
  std::int32_t dist = 0;
  Ratio mu;
  HalfInteger delta;
  bool delta_overridden = false;
  std::int32_t max_degree = 0;
  bool degree_overridden = false;
  NodeId n = 0;
  std::int64_t required = 1;          // max{floor(Delta^mu / (56 log d)), 1}
  bool shortfall = false;

  // Sweep diagnostics.
  std::int32_t ball_term_hits = 0;    // radii whose ball meets the ball term
  std::int32_t cylinder_radius_hi = 0;
  std::int32_t cylinder_radius_lo = 0;
  std::vector<std::int32_t> cylinder_radii;  // radii actually swept
  std::vector<bool> cylinder_disconnects;    // parallel: p, q separated by removal

  std::size_t size() const { return subsets.size(); }
};

struct WitnessOptions {
  std::optional<HalfInteger> delta;
  std::optional<std::int32_t> max_degree;
  std::optional<Ratio> bound_cap;  // family bound becomes min(nested bound, cap)
};

namespace detail {

struct WitnessCandidate {
  NodeId anchor;
  NodeSet set;
  Ratio h;
  WitnessOrigin origin;
};

// Grows balls from a distance vector (kUnreachable entries skipped) for
// r = 0..max_radius, measuring node expansion in g. Stops once a ball
// exceeds floor(n/2) nodes or stops growing. Calls on_ball(r, size,
// boundary, members-so-far) for every ball.
template <typename OnBall>
void sweep_balls(const Graph& g, const std::vector<std::int32_t>& dist, std::int32_t max_radius,
                 OnBall&& on_ball) {
  const NodeId n = g.node_count();
  const std::size_t half = static_cast<std::size_t>(n) / 2;
  std::vector<std::vector<NodeId>> levels;
  for (NodeId v = 0; v < n; ++v) {
    if (dist[v] == kUnreachable || dist[v] > max_radius) continue;
    if (static_cast<std::size_t>(dist[v]) >= levels.size()) levels.resize(dist[v] + 1);
    levels[dist[v]].push_back(v);
  }
  std::vector<char> in(n, 0);
  std::vector<std::int32_t> touching(n, 0);  // neighbors inside the set, for outside nodes
  std::int64_t boundary_size = 0;
  std::vector<NodeId> members;
  for (std::size_t r = 0; r < levels.size(); ++r) {
    if (levels[r].empty()) break;
    for (NodeId u : levels[r]) {
      if (touching[u] > 0) --boundary_size;
      in[u] = 1;
      members.push_back(u);
      for (NodeId w : g.neighbors(u)) {
        if (in[w]) continue;
        if (touching[w]++ == 0) ++boundary_size;
      }
    }
    if (members.size() > half) break;
    on_ball(static_cast<std::int32_t>(r), boundary_size, members);
  }
}

}  // namespace detail

/// Mean node expansion of the balls B(p, 0..j-1); a diagnostic quantity.
inline double average_ball_expansion(const Graph& g, NodeId p, std::int32_t j) {
  if (j < 1) throw std::domain_error("average_ball_expansion: j must be >= 1");
  double sum = 0;
  std::int32_t counted = 0;
  detail::sweep_balls(g, bfs_distances(g, p), j - 1,
                      [&](std::int32_t, std::int64_t bnd, const std::vector<NodeId>& members) {
                        sum += static_cast<double>(bnd) / static_cast<double>(members.size());
                        ++counted;
                      });
  if (counted < j) throw std::domain_error("average_ball_expansion: balls exceed n/2 before radius j-1");
  return sum / j;
}

/// Nested node-expansion witnesses between p and q, all containing one anchor.
///
/// Two sweeps feed a candidate pool:
///  - balls B_G(a, r), r <= floor(Delta/2), around the endpoint a with the
///    smaller half-diameter ball, kept when they meet 8 ln(n/2)/Delta;
///  - for each cylinder radius from floor(alpha1 Delta) down to
///    ceil(alpha1 Delta / 2), alpha1 = 1/(14 Delta^(1-mu) log 2d), balls of
///    G - C around the endpoint with the smaller half ball in G - C, grown
///    to half the p-q distance in G - C (or saturation), kept when their
///    expansion in G meets the cylinder term.
/// Every kept set also satisfies the family bound. The answer is the longest
/// strictly nested chain in the pool with a single anchor. Fewer than the
/// required count sets the shortfall flag instead of failing.
inline WitnessFamily nested_witness_family(const Graph& g, NodeId p, NodeId q, const Ratio& mu,
                                           const WitnessOptions& opts = {}) {
  detail::check_node(g, p, "nested_witness_family");
  detail::check_node(g, q, "nested_witness_family");
  if (p == q) throw std::domain_error("nested_witness_family: p equals q");
  if (mu <= Ratio(0) || mu >= Ratio(1)) throw std::domain_error("nested_witness_family: mu must lie in (0,1)");
  const NodeId n = g.node_count();
  if (n < 4) throw std::domain_error("nested_witness_family: requires n >= 4");

  WitnessFamily fam;
  fam.p = p;
  fam.q = q;
  fam.n = n;
  fam.mu = mu;
  fam.delta_overridden = opts.delta.has_value();
  fam.delta = opts.delta ? effective_delta(*opts.delta) : resolve_delta(g).delta;
  fam.degree_overridden = opts.max_degree.has_value();
  fam.max_degree = opts.max_degree ? *opts.max_degree : g.max_degree();
  if (fam.max_degree < 2) throw std::domain_error("nested_witness_family: max degree must be >= 2");

  const auto dp = bfs_distances(g, p);
  const auto dq = bfs_distances(g, q);
  fam.dist = dp[q];
  const std::int32_t D = fam.dist;

  fam.bound = nested_bound(D, n, fam.max_degree, fam.delta, mu);
  if (opts.bound_cap && *opts.bound_cap < fam.bound.value) {
    fam.bound = BoundValue{*opts.bound_cap, opts.bound_cap->to_double()};
  }
  fam.ball_term = nested_ball_term(D, n);
  fam.cylinder_term = nested_cylinder_term(D, n, fam.max_degree, fam.delta, mu);
  {
    const BoundFloat m = detail::to_float(mu);
    const BoundFloat t = pow(BoundFloat(D), m) / (56 * detail::log2f(BoundFloat(fam.max_degree)));
    fam.required = std::max<std::int64_t>(1, floor(t).convert_to<std::int64_t>());
  }

  std::vector<detail::WitnessCandidate> pool;

  // Ball sweep in G.
  {
    const std::int32_t half_r = D / 2;
    std::int64_t size_p = 0, size_q = 0;
    for (NodeId v = 0; v < n; ++v) {
      size_p += dp[v] <= half_r;
      size_q += dq[v] <= half_r;
    }
    const NodeId anchor = size_p <= size_q ? p : q;
    const Ratio limit = min(fam.ball_term.value, fam.bound.value);
    detail::sweep_balls(g, anchor == p ? dp : dq, half_r,
                        [&](std::int32_t r, std::int64_t bnd, const std::vector<NodeId>& members) {
                          const Ratio h(bnd, static_cast<std::int64_t>(members.size()));
                          if (h <= fam.ball_term.value) ++fam.ball_term_hits;
                          if (h <= limit) pool.push_back({anchor, NodeSet(members), h, {-1, r}});
                        });
  }

  // Cylinder sweep.
  if (D > 6) {
    const BoundFloat m = detail::to_float(mu);
    const BoundFloat a1d = pow(BoundFloat(D), m) / (14 * detail::log2f(BoundFloat(2 * fam.max_degree)));
    fam.cylinder_radius_hi = std::min(floor(a1d).convert_to<std::int32_t>(), (D - 1) / 4);
    fam.cylinder_radius_lo = std::max(ceil(a1d / 2).convert_to<std::int32_t>(), 1);
    const Ratio limit = min(fam.cylinder_term.value, fam.bound.value);
    for (std::int32_t rad = fam.cylinder_radius_hi; rad >= fam.cylinder_radius_lo; --rad) {
      const Cylinder cyl = cylinder(g, p, q, rad);
      const InducedSubgraph h(g, cyl.nodes);
      const auto hp = h.raw_distances(p);
      const auto hq = h.raw_distances(q);
      const bool connected = hp[q] != kUnreachable;
      fam.cylinder_radii.push_back(rad);
      fam.cylinder_disconnects.push_back(!connected);
      const std::int32_t reach = connected ? hp[q] / 2 : n;
      std::int64_t size_p = 0, size_q = 0;
      for (NodeId v = 0; v < n; ++v) {
        size_p += hp[v] != kUnreachable && hp[v] <= reach;
        size_q += hq[v] != kUnreachable && hq[v] <= reach;
      }
      const NodeId anchor = size_p <= size_q ? p : q;
      detail::sweep_balls(g, anchor == p ? hp : hq, reach,
                          [&](std::int32_t r, std::int64_t, const std::vector<NodeId>& members) {
                            // Expansion is measured in G, not in G - C.
                            const NodeSet s(members);
                            const Ratio hg(static_cast<std::int64_t>(boundary(g, s).size()),
                                           static_cast<std::int64_t>(s.size()));
                            if (hg <= limit) pool.push_back({anchor, s, hg, {rad, r}});
                          });
    }
  }

  // Longest strictly nested chain per anchor.
  std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
    if (a.anchor != b.anchor) return a.anchor < b.anchor;
    if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
    return a.set < b.set;
  });
  pool.erase(std::unique(pool.begin(), pool.end(),
                         [](const auto& a, const auto& b) { return a.anchor == b.anchor && a.set == b.set; }),
             pool.end());

  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(pool.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (NodeId u : pool[i].set) bits[i][u / 64] |= std::uint64_t{1} << (u % 64);
  }
  auto subset = [&](std::size_t a, std::size_t b) {
    for (std::size_t w = 0; w < words; ++w) {
      if (bits[a][w] & ~bits[b][w]) return false;
    }
    return true;
  };
  std::vector<std::int32_t> chain(pool.size(), 1);
  std::vector<std::int64_t> prev(pool.size(), -1);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (pool[j].anchor != pool[i].anchor || pool[j].set.size() >= pool[i].set.size()) continue;
      if (chain[j] + 1 > chain[i] && subset(j, i)) {
        chain[i] = chain[j] + 1;
        prev[i] = static_cast<std::int64_t>(j);
      }
    }
  }
  std::int64_t best = -1;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (best < 0 || chain[i] > chain[best]) best = static_cast<std::int64_t>(i);
  }
  fam.anchor = best >= 0 ? pool[best].anchor : p;
  std::vector<std::size_t> picked;
  for (std::int64_t i = best; i >= 0; i = prev[i]) picked.push_back(static_cast<std::size_t>(i));
  std::reverse(picked.begin(), picked.end());
  for (std::size_t i : picked) {
    fam.subsets.push_back(pool[i].set);
    fam.expansions.push_back(pool[i].h);
    fam.origins.push_back(pool[i].origin);
  }
  fam.shortfall = static_cast<std::int64_t>(fam.subsets.size()) < fam.required;
  return fam;
}

/// Checks every family invariant from scratch; returns the first violation
/// or an empty string.
inline std::string check_witness_family(const Graph& g, const WitnessFamily& fam) {
  const std::size_t half = static_cast<std::size_t>(g.node_count()) / 2;
  for (std::size_t i = 0; i < fam.subsets.size(); ++i) {
    const NodeSet& s = fam.subsets[i];
    if (s.empty() || s.size() > half) return "subset " + std::to_string(i) + " has invalid size";
    if (!s.contains(fam.anchor)) return "subset " + std::to_string(i) + " misses the anchor";
    if (node_expansion(g, s) != fam.expansions[i]) return "subset " + std::to_string(i) + " expansion mismatch";
    if (fam.expansions[i] > fam.bound.value) return "subset " + std::to_string(i) + " exceeds the bound";
    if (i > 0 && !(fam.subsets[i - 1].size() < s.size() && fam.subsets[i - 1].is_subset_of(s))) {
      return "subsets " + std::to_string(i - 1) + " and " + std::to_string(i) + " are not strictly nested";
    }
  }
  return "";
}

}  // namespace hyperex
