#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "graph.hpp"
#include "graph_ops.hpp"
#include "rational.hpp"

namespace hyperex {

// Gromov hyperbolicity through the four-node condition. For a quadruple the
// three pairing sums are sorted S <= M <= L and rho = (L - M) / 2; delta(G)
// is the maximum rho over all quadruples. Values are kept as half-integers.

struct HyperbolicityResult {
  HalfInteger delta;
  std::vector<NodeId> witness;  // four ids, ascending; empty when n < 4
  HalfInteger effective_delta;
  bool is_exact = true;
};

/// Distances of a quadruple (a, b, c, d) in the order ab, ac, ad, bc, bd, cd.
using QuadrupleDistances = std::array<std::int64_t, 6>;

inline HalfInteger rho_of_quadruple(const QuadrupleDistances& d) {
  std::array<std::int64_t, 3> sums{d[0] + d[5], d[1] + d[4], d[2] + d[3]};
  std::sort(sums.begin(), sums.end());
  return HalfInteger::from_halves(sums[2] - sums[1]);
}

inline HalfInteger effective_delta(HalfInteger delta) {
  return std::max(delta, HalfInteger::from_halves(1));
}

inline HalfInteger effective_delta(const HyperbolicityResult& r) { return effective_delta(r.delta); }

struct DeltaOptions {
  NodeId max_nodes = 400;   // guard for the O(n^4) scan
  unsigned workers = 1;     // quadruple blocks are split by first index
};

namespace detail {

struct QuadBest {
  std::int64_t halves = -1;
  std::array<NodeId, 4> quad{0, 0, 0, 0};

  void offer(std::int64_t h, std::array<NodeId, 4> q) {
    if (h > halves || (h == halves && q < quad)) {
      halves = h;
      quad = q;
    }
  }
};

inline QuadBest scan_first_indices(const std::vector<std::int32_t>& dist, NodeId n, NodeId first,
                                   NodeId stride) {
  QuadBest best;
  const std::size_t N = n;
  for (NodeId a = first; a < n; a += stride) {
    const std::int32_t* ra = dist.data() + a * N;
    for (NodeId b = a + 1; b < n; ++b) {
      const std::int32_t* rb = dist.data() + b * N;
      const std::int32_t ab = ra[b];
      for (NodeId c = b + 1; c < n; ++c) {
        const std::int32_t* rc = dist.data() + c * N;
        const std::int32_t ac = ra[c], bc = rb[c];
        for (NodeId d = c + 1; d < n; ++d) {
          const std::int32_t s1 = ab + rc[d];
          const std::int32_t s2 = ac + rb[d];
          const std::int32_t s3 = ra[d] + bc;
          // L - M equals (max - mid) of the three sums.
          const std::int32_t hi = std::max({s1, s2, s3});
          const std::int32_t lo = std::min({s1, s2, s3});
          const std::int32_t mid = s1 + s2 + s3 - hi - lo;
          const std::int32_t h = hi - mid;
          if (h > best.halves) {
            best.halves = h;
            best.quad = {a, b, c, d};
          }
        }
      }
    }
  }
  return best;
}

}  // namespace detail

/// Exact delta by scanning every 4-subset of distinct nodes.
inline HyperbolicityResult delta_exact(const Graph& g, const DeltaOptions& opts = {}) {
  const NodeId n = g.node_count();
  if (n > opts.max_nodes) {
    throw std::domain_error("delta_exact: n = " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(opts.max_nodes) +
                            " for the O(n^4) scan; use the 2-approximation or raise the cap");
  }
  HyperbolicityResult r;
  r.is_exact = true;
  if (n < 4) {
    r.delta = HalfInteger::from_halves(0);
    r.effective_delta = effective_delta(r.delta);
    return r;
  }
  const auto dist = all_pairs_distances(g);
  const unsigned workers = std::max(1u, opts.workers);
  detail::QuadBest best;
  if (workers == 1) {
    best = detail::scan_first_indices(dist, n, 0, 1);
  } else {
    std::vector<detail::QuadBest> partial(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        partial[w] = detail::scan_first_indices(dist, n, static_cast<NodeId>(w),
                                                static_cast<NodeId>(workers));
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : partial) {
      if (p.halves >= 0) best.offer(p.halves, p.quad);
    }
  }
  r.delta = HalfInteger::from_halves(best.halves);
  r.witness.assign(best.quad.begin(), best.quad.end());
  r.effective_delta = effective_delta(r.delta);
  return r;
}

/// Fixed-basepoint estimate v with v <= delta <= 2v. The base is the smaller
/// endpoint of the diameter pair; only quadruples containing it are scanned.
inline HyperbolicityResult delta_two_approx(const Graph& g) {
  const NodeId n = g.node_count();
  HyperbolicityResult r;
  r.is_exact = false;
  if (n < 4) {
    r.delta = HalfInteger::from_halves(0);
    r.effective_delta = effective_delta(r.delta);
    return r;
  }
  const NodeId base = diameter_pair(g).p;
  const auto db = bfs_distances(g, base);
  std::vector<std::vector<std::int32_t>> rows(n);
  for (NodeId u = 0; u < n; ++u) rows[u] = bfs_distances(g, u);

  detail::QuadBest best;
  for (NodeId x = 0; x < n; ++x) {
    if (x == base) continue;
    for (NodeId y = x + 1; y < n; ++y) {
      if (y == base) continue;
      for (NodeId z = y + 1; z < n; ++z) {
        if (z == base) continue;
        const std::int64_t s1 = db[x] + rows[y][z];
        const std::int64_t s2 = db[y] + rows[x][z];
        const std::int64_t s3 = db[z] + rows[x][y];
        const std::int64_t hi = std::max({s1, s2, s3});
        const std::int64_t lo = std::min({s1, s2, s3});
        const std::int64_t h = hi - (s1 + s2 + s3 - hi - lo);
        std::array<NodeId, 4> q{base, x, y, z};
        std::sort(q.begin(), q.end());
        best.offer(h, q);
      }
    }
  }
  r.delta = HalfInteger::from_halves(best.halves);
  r.witness.assign(best.quad.begin(), best.quad.end());
  r.effective_delta = effective_delta(r.delta);
  return r;
}

/// The delta a construction should use when the caller gave no override.
struct ResolvedDelta {
  HalfInteger delta;          // effective value (>= 1/2), safe upper estimate
  HalfInteger measured;       // exact delta, or the 2-approx value
  bool is_exact = true;
  std::string method;         // "tree", "exact", "two-approx-doubled"
};

/// Trees are 0-hyperbolic; small graphs get the exact scan; larger ones use
/// twice the fixed-basepoint value, which is an upper bound on delta.
inline ResolvedDelta resolve_delta(const Graph& g, const DeltaOptions& opts = {}) {
  ResolvedDelta out;
  if (g.edge_count() + 1 == static_cast<std::size_t>(g.node_count())) {
    out.measured = HalfInteger::from_halves(0);
    out.method = "tree";
  } else if (g.node_count() <= opts.max_nodes) {
    out.measured = delta_exact(g, opts).delta;
    out.method = "exact";
  } else {
    out.measured = delta_two_approx(g).delta;
    out.is_exact = false;
    out.method = "two-approx-doubled";
    out.delta = effective_delta(HalfInteger::from_halves(2 * out.measured.halves()));
    return out;
  }
  out.delta = effective_delta(out.measured);
  return out;
}

}  // namespace hyperex
