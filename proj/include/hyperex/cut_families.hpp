#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph_ops.hpp"
#include "hyperbolicity.hpp"
#include "rational.hpp"

namespace hyperex {

/// base^exp, saturating at INT64_MAX.
inline std::int64_t saturating_pow(std::int64_t base, std::int64_t exp) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

struct BallCut {
  NodeId center = 0;
  std::int32_t level = 0;    // BFS level of the center from s
  NodeSet ball;              // B(center, ball_radius)
  EdgeList cut_edges;
  NodeSet cut_nodes;         // endpoints of cut edges inside the ball
  std::int64_t structural_bound = 0;  // d_excl * |boundary(B(center, ball_radius - 1))|
};

/// Pairwise node- and edge-disjoint s-t cuts built from balls around
/// geodesic nodes at evenly spaced BFS levels.
struct CutFamily {
  NodeId s = 0;
  NodeId t = 0;
  HalfInteger delta;             // effective delta used
  bool delta_overridden = false;
  std::int32_t d_excl = 0;       // max degree outside the exclusion set (or override)
  bool degree_overridden = false;
  NodeSet degree_excluded;       // {s, t} and B(s, floor(35 delta))
  std::int32_t st_distance = 0;
  double distance_threshold = 0; // 48 delta + 8 delta log n
  std::int32_t level_stride = 0; // floor(50 delta)
  std::int32_t ball_radius = 0;  // floor(12 delta)
  std::int32_t exclusion_radius = 0;  // floor(35 delta)
  std::int64_t max_cut_edges = 0;     // d_excl^(ball_radius + 1), saturating
  std::int32_t guaranteed = 0;        // floor((dist - 8 delta log n) / (50 delta))
  std::vector<BallCut> cuts;
};

struct CutFamilyOptions {
  std::optional<HalfInteger> delta;
  std::optional<std::int32_t> max_degree;
};

inline CutFamily disjoint_cut_family(const Graph& g, NodeId s, NodeId t, const CutFamilyOptions& opts = {}) {
  detail::check_node(g, s, "disjoint_cut_family");
  detail::check_node(g, t, "disjoint_cut_family");
  if (s == t) throw std::domain_error("disjoint_cut_family: s equals t");

  CutFamily fam;
  fam.s = s;
  fam.t = t;
  fam.delta_overridden = opts.delta.has_value();
  fam.delta = opts.delta ? effective_delta(*opts.delta) : resolve_delta(g).delta;
  const double dval = fam.delta.value();
  const double logn = std::log2(static_cast<double>(g.node_count()));
  const auto dist = bfs_distances(g, s);
  fam.st_distance = dist[t];
  fam.distance_threshold = 48 * dval + 8 * dval * logn;
  if (!(fam.st_distance > fam.distance_threshold)) {
    std::ostringstream msg;
    msg << "dist(s,t) = " << fam.st_distance << " <= 48*delta + 8*delta*log n = " << fam.distance_threshold
        << " (delta = " << fam.delta.str() << ")";
    throw std::domain_error(msg.str());
  }

  fam.exclusion_radius = static_cast<std::int32_t>(fam.delta.floor_times(35));
  fam.level_stride = static_cast<std::int32_t>(fam.delta.floor_times(50));
  fam.ball_radius = static_cast<std::int32_t>(fam.delta.floor_times(12));
  {
    std::vector<NodeId> excl{s, t};
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (dist[v] <= fam.exclusion_radius) excl.push_back(v);
    }
    fam.degree_excluded = NodeSet(std::move(excl));
  }
  fam.degree_overridden = opts.max_degree.has_value();
  fam.d_excl = opts.max_degree ? *opts.max_degree : max_degree_excluding(g, fam.degree_excluded);
  fam.max_cut_edges = saturating_pow(fam.d_excl, fam.ball_radius + 1);
  fam.guaranteed = static_cast<std::int32_t>(
      std::floor((fam.st_distance - 8 * dval * logn) / (50 * dval)));

  const CanonicalPath path = canonical_shortest_path(g, s, t);
  for (std::int32_t i = 1; i <= fam.guaranteed; ++i) {
    const std::int32_t level = i * fam.level_stride;
    BallCut c;
    c.center = path[level];
    c.level = level;
    c.ball = ball(g, c.center, fam.ball_radius);
    c.cut_edges = cut_edge_set(g, c.ball);
    std::vector<char> in = c.ball.mask(g.node_count());
    std::vector<NodeId> inner;
    for (const Edge& e : c.cut_edges) inner.push_back(in[e.u] ? e.u : e.v);
    c.cut_nodes = NodeSet(std::move(inner));
    const std::size_t inner_boundary =
        fam.ball_radius >= 1 ? boundary(g, ball(g, c.center, fam.ball_radius - 1)).size() : 1;
    c.structural_bound = static_cast<std::int64_t>(fam.d_excl) * static_cast<std::int64_t>(inner_boundary);
    fam.cuts.push_back(std::move(c));
  }
  return fam;
}

struct CutCertificate {
  bool separates = false;          // removing the cut edges disconnects s and t
  bool excludes_terminals = false; // s and t lie outside the ball
  bool disjoint = false;           // no shared edge or cut node with any other cut
  bool within_size = false;        // |E_j| <= d_excl^(radius+1)
  bool all() const { return separates && excludes_terminals && disjoint && within_size; }
};

struct CutFamilyReport {
  std::vector<CutCertificate> per_cut;
  bool all_pass() const {
    for (const auto& c : per_cut) {
      if (!c.all()) return false;
    }
    return true;
  }
};

/// Re-checks every family invariant from the stored cuts, with a fresh BFS
/// per cut for separation.
inline CutFamilyReport certify_cut_family(const Graph& g, const CutFamily& fam) {
  CutFamilyReport report;
  for (std::size_t j = 0; j < fam.cuts.size(); ++j) {
    const BallCut& c = fam.cuts[j];
    CutCertificate cert;

    std::vector<char> blocked(g.edge_count(), 0);
    for (const Edge& e : c.cut_edges) {
      if (auto id = g.edge_id(e.u, e.v)) blocked[*id] = 1;
    }
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> queue{fam.s};
    seen[fam.s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head];
      auto nb = g.neighbors(u);
      auto ids = g.incident_edges(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (blocked[ids[i]] || seen[nb[i]]) continue;
        seen[nb[i]] = 1;
        queue.push_back(nb[i]);
      }
    }
    cert.separates = !seen[fam.t];
    cert.excludes_terminals = !c.ball.contains(fam.s) && !c.ball.contains(fam.t);
    cert.within_size = static_cast<std::int64_t>(c.cut_edges.size()) <= fam.max_cut_edges;

    cert.disjoint = true;
    for (std::size_t l = 0; l < fam.cuts.size() && cert.disjoint; ++l) {
      if (l == j) continue;
      const BallCut& o = fam.cuts[l];
      if (!set_intersection(c.cut_nodes, o.cut_nodes).empty()) cert.disjoint = false;
      EdgeList shared;
      std::set_intersection(c.cut_edges.begin(), c.cut_edges.end(), o.cut_edges.begin(), o.cut_edges.end(),
                            std::back_inserter(shared));
      if (!shared.empty()) cert.disjoint = false;
    }
    report.per_cut.push_back(cert);
  }
  return report;
}

}  // namespace hyperex
