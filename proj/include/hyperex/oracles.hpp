#pragma once

// Brute-force references for small graphs. Everything here works from the
// raw definitions and uses only the graph type, never the algorithms under
// test.

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace hyperex::oracle {

class GuardError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline void guard(bool ok, const std::string& msg) {
  if (!ok) throw GuardError("oracle size guard: " + msg);
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.node_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return adj;
}

// Lexicographic order on the sorted member lists of two masks.
inline bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    const int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

inline NodeSet mask_to_set(std::uint64_t m) {
  std::vector<NodeId> ids;
  for (NodeId i = 0; m; ++i, m >>= 1) {
    if (m & 1) ids.push_back(i);
  }
  return NodeSet(std::move(ids));
}

/// Exact minimum node expansion over 1 <= |S| <= n/2, lexicographically
/// smallest minimizer.
inline std::pair<NodeSet, Ratio> brute_min_node_expansion(const Graph& g) {
  const NodeId n = g.node_count();
  guard(n <= 20, "brute_min_node_expansion needs n <= 20");
  guard(n >= 2, "brute_min_node_expansion needs n >= 2");
  const auto adj = adjacency_masks(g);
  std::uint32_t best = 0;
  std::int64_t bn = 0, bd = 1;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int size = std::popcount(s);
    if (size > n / 2) continue;
    std::uint32_t nb = 0;
    for (std::uint32_t m = s; m; m &= m - 1) nb |= adj[std::countr_zero(m)];
    const std::int64_t bnd = std::popcount(nb & ~s);
    const std::int64_t lhs = bnd * bd, rhs = bn * size;
    if (best == 0 || lhs < rhs || (lhs == rhs && mask_lex_less(s, best))) {
      best = s;
      bn = bnd;
      bd = size;
    }
  }
  return {mask_to_set(best), Ratio(bn, bd)};
}

/// Distinct cut-edge sets of all S with s in S, t not in S, at most k edges.
/// Each set lists edge ids in ascending order; the list is sorted.
inline std::vector<std::vector<EdgeId>> enumerate_size_constrained_cuts(const Graph& g, NodeId s, NodeId t,
                                                                        std::int64_t k) {
  const NodeId n = g.node_count();
  guard(n <= 16, "enumerate_size_constrained_cuts needs n <= 16");
  if (s < 0 || t < 0 || s >= n || t >= n || s == t) throw std::domain_error("oracle: bad terminals");
  std::vector<NodeId> free;
  for (NodeId v = 0; v < n; ++v) {
    if (v != s && v != t) free.push_back(v);
  }
  std::vector<std::vector<EdgeId>> out;
  std::vector<char> in(n);
  for (std::uint32_t m = 0; m < (1u << free.size()); ++m) {
    std::fill(in.begin(), in.end(), 0);
    in[s] = 1;
    for (std::size_t i = 0; i < free.size(); ++i) in[free[i]] = (m >> i) & 1;
    std::vector<EdgeId> cut;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
      if (in[g.edge(e).u] != in[g.edge(e).v]) cut.push_back(e);
    }
    if (static_cast<std::int64_t>(cut.size()) <= k) out.push_back(std::move(cut));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct HittingSet {
  std::vector<EdgeId> edges;
  std::int64_t opt = 0;
};

/// Minimum set of edges meeting every cut with at most k edges. Exact
/// search by iterative deepening with a disjoint-packing lower bound.
inline HittingSet brute_ehssc(const Graph& g, NodeId s, NodeId t, std::int64_t k) {
  guard(g.node_count() <= 12, "brute_ehssc needs n <= 12");
  guard(g.edge_count() <= 128, "brute_ehssc needs m <= 128");
  using Bits = std::bitset<128>;
  const auto cuts = enumerate_size_constrained_cuts(g, s, t, k);
  guard(cuts.size() <= 10000, "brute_ehssc needs at most 10^4 cuts");
  std::vector<Bits> sets;
  for (const auto& c : cuts) {
    Bits b;
    for (EdgeId e : c) b.set(e);
    sets.push_back(b);
  }
  // Supersets are hit whenever their subsets are.
  std::vector<Bits> minimal;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (j == i) continue;
      if ((sets[j] & ~sets[i]).none() && (sets[j] != sets[i] || j < i)) dominated = true;
    }
    if (!dominated) minimal.push_back(sets[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Bits& a, const Bits& b) { return a.count() < b.count(); });

  const std::size_t m = g.edge_count();
  Bits chosen;
  auto lower_bound = [&](const Bits& have) {
    Bits used;
    std::int64_t lb = 0;
    for (const Bits& c : minimal) {
      if ((c & have).any() || (c & used).any()) continue;
      used |= c;
      ++lb;
    }
    return lb;
  };
  auto search = [&](auto&& self, std::int64_t budget) -> bool {
    const Bits* open = nullptr;
    for (const Bits& c : minimal) {
      if ((c & chosen).none()) {
        open = &c;
        break;
      }
    }
    if (!open) return true;
    if (budget == 0 || lower_bound(chosen) > budget) return false;
    for (std::size_t e = 0; e < m; ++e) {
      if (!open->test(e)) continue;
      chosen.set(e);
      if (self(self, budget - 1)) return true;
      chosen.reset(e);
    }
    return false;
  };
  HittingSet out;
  for (std::int64_t budget = 0;; ++budget) {
    chosen.reset();
    if (search(search, budget)) {
      out.opt = budget;
      break;
    }
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (chosen.test(e)) out.edges.push_back(static_cast<EdgeId>(e));
  }
  out.opt = static_cast<std::int64_t>(out.edges.size());
  return out;
}

/// Optimal shared-edge count through the hitting-set reduction.
inline std::int64_t brute_uumv(const Graph& g, NodeId s, NodeId t, std::int64_t r, std::int64_t kappa) {
  if (r < 1 || kappa <= r) throw std::domain_error("oracle: requires 0 < r < kappa");
  return brute_ehssc(g, s, t, (kappa + r - 1) / r - 1).opt;
}

/// All simple s-t paths as node lists, in DFS order over sorted neighbors.
inline std::vector<std::vector<NodeId>> simple_paths(const Graph& g, NodeId s, NodeId t, std::size_t limit) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> cur{s};
  std::vector<char> on(g.node_count(), 0);
  on[s] = 1;
  auto dfs = [&](auto&& self, NodeId u) -> void {
    if (u == t) {
      guard(out.size() < limit, "simple path count exceeds " + std::to_string(limit));
      out.push_back(cur);
      return;
    }
    for (NodeId w : g.neighbors(u)) {
      if (on[w]) continue;
      on[w] = 1;
      cur.push_back(w);
      self(self, w);
      cur.pop_back();
      on[w] = 0;
    }
  };
  dfs(dfs, s);
  return out;
}

/// Optimal shared-edge count by trying every multiset of kappa simple paths.
inline std::int64_t direct_uumv(const Graph& g, NodeId s, NodeId t, std::int64_t r, std::int64_t kappa) {
  if (r < 1 || kappa <= r) throw std::domain_error("oracle: requires 0 < r < kappa");
  guard(kappa <= 3, "direct_uumv needs kappa <= 3");
  guard(g.node_count() <= 12, "direct_uumv needs n <= 12");
  const auto paths = simple_paths(g, s, t, 2000);
  std::vector<std::vector<EdgeId>> pe;
  for (const auto& p : paths) {
    std::vector<EdgeId> es;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) es.push_back(*g.edge_id(p[i], p[i + 1]));
    pe.push_back(std::move(es));
  }
  double combos = 1;
  for (std::int64_t i = 0; i < kappa; ++i) combos *= static_cast<double>(paths.size() + i) / static_cast<double>(i + 1);
  guard(combos <= 2e7, "direct_uumv path tuple count too large");

  std::vector<std::int64_t> use(g.edge_count(), 0);
  std::int64_t shared = 0;
  std::int64_t best = static_cast<std::int64_t>(g.edge_count()) + 1;
  auto rec = [&](auto&& self, std::size_t from, std::int64_t left) -> void {
    if (shared >= best) return;
    if (left == 0) {
      best = shared;
      return;
    }
    for (std::size_t i = from; i < pe.size(); ++i) {
      for (EdgeId e : pe[i]) {
        if (++use[e] == r + 1) ++shared;
      }
      self(self, i, left - 1);
      for (EdgeId e : pe[i]) {
        if (use[e]-- == r + 1) --shared;
      }
    }
  };
  rec(rec, 0, kappa);
  return best;
}

/// Minimum s-t cut over all bipartitions; nullopt means infinite. Capacities
/// are per edge id, nullopt meaning infinite.
inline std::optional<std::int64_t> brute_min_cut(const Graph& g, const std::vector<std::optional<std::int64_t>>& cap,
                                                 NodeId s, NodeId t) {
  const NodeId n = g.node_count();
  guard(n <= 20, "brute_min_cut needs n <= 20");
  std::vector<NodeId> free;
  for (NodeId v = 0; v < n; ++v) {
    if (v != s && v != t) free.push_back(v);
  }
  std::optional<std::int64_t> best;
  std::vector<char> in(n);
  for (std::uint32_t m = 0; m < (1u << free.size()); ++m) {
    std::fill(in.begin(), in.end(), 0);
    in[s] = 1;
    for (std::size_t i = 0; i < free.size(); ++i) in[free[i]] = (m >> i) & 1;
    std::int64_t total = 0;
    bool inf = false;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()) && !inf; ++e) {
      if (in[g.edge(e).u] == in[g.edge(e).v]) continue;
      if (!cap[e]) inf = true;
      else total += *cap[e];
    }
    if (!inf && (!best || total < *best)) best = total;
  }
  return best;
}

/// Four-point hyperbolicity from Floyd-Warshall distances over all ordered
/// quadruples, in halves.
inline HalfInteger brute_delta(const Graph& g) {
  const NodeId n = g.node_count();
  guard(n <= 40, "brute_delta needs n <= 40");
  constexpr std::int64_t kInf = 1 << 29;
  std::vector<std::int64_t> d(static_cast<std::size_t>(n) * n, kInf);
  for (NodeId i = 0; i < n; ++i) d[i * n + i] = 0;
  for (const Edge& e : g.edges()) d[e.u * n + e.v] = d[e.v * n + e.u] = 1;
  for (NodeId k = 0; k < n; ++k) {
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    }
  }
  std::int64_t best = 0;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      for (NodeId c = 0; c < n; ++c) {
        for (NodeId e = 0; e < n; ++e) {
          // (d(a,b)+d(c,e)) - max of the other two sums, when it is the largest.
          const std::int64_t s1 = d[a * n + b] + d[c * n + e];
          const std::int64_t s2 = d[a * n + c] + d[b * n + e];
          const std::int64_t s3 = d[a * n + e] + d[b * n + c];
          best = std::max(best, s1 - std::max(s2, s3));
        }
      }
    }
  }
  return HalfInteger::from_halves(best);
}

}  // namespace hyperex::oracle
