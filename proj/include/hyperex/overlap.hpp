#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "graph.hpp"
#include "graph_ops.hpp"
#include "hyperbolicity.hpp"
#include "witness.hpp"

namespace hyperex {

enum class Handedness { Left, Right };

inline const char* to_string(Handedness h) { return h == Handedness::Left ? "left" : "right"; }

struct OverlapGroup {
  int parity = 0;  // of the 0-based segment index
  Handedness hand = Handedness::Left;
};

struct OverlapFamilySet {
  NodeId p = 0;
  NodeId q = 0;
  std::int32_t dist = 0;
  std::int32_t tau = 0;
  std::int32_t segment_length = 0;  // floor(Delta/tau)
  Ratio mu;
  HalfInteger delta;
  bool delta_overridden = false;
  std::int32_t max_degree = 0;
  bool degree_overridden = false;
  TauCheck tau_check;
  bool forced = false;
  BoundValue family_bound;

  std::vector<NodeId> anchors;                // p_1 .. p_{tau+1}
  std::vector<WitnessFamily> segments;        // one per segment
  std::vector<Handedness> handedness;         // parallel to segments
  std::array<std::int32_t, 4> group_sizes{};  // (even,L) (even,R) (odd,L) (odd,R)
  OverlapGroup group;
  std::vector<std::int32_t> chosen;           // segment indices in the group
  std::vector<WitnessFamily> families;        // the chosen segments' families
  bool shortfall = false;

  std::int32_t min_families() const { return tau / 4; }
};

struct OverlapOptions {
  std::optional<HalfInteger> delta;
  std::optional<std::int32_t> max_degree;
  bool force = false;  // run even if tau fails validation
};

/// True iff the sets are disjoint or each keeps at least floor(Delta/(2 tau))
/// nodes the other lacks.
inline bool verify_limited_overlap(const NodeSet& a, const NodeSet& b, std::int64_t dist, std::int64_t tau) {
  if (tau < 1) throw std::domain_error("verify_limited_overlap: tau must be >= 1");
  if (set_intersection(a, b).empty()) return true;
  const std::size_t need = static_cast<std::size_t>(dist / (2 * tau));
  return set_difference(a, b).size() >= need && set_difference(b, a).size() >= need;
}

inline OverlapFamilySet overlap_families(const Graph& g, NodeId p, NodeId q, std::int32_t tau, const Ratio& mu,
                                         const OverlapOptions& opts = {}) {
  detail::check_node(g, p, "overlap_families");
  detail::check_node(g, q, "overlap_families");
  OverlapFamilySet out;
  out.p = p;
  out.q = q;
  out.tau = tau;
  out.mu = mu;
  out.forced = opts.force;
  const CanonicalPath path = canonical_shortest_path(g, p, q);
  out.dist = path.length();
  if (out.dist <= 8) throw std::domain_error("overlap_families: requires Delta > 8, got " + std::to_string(out.dist));
  if (tau < 1) throw std::domain_error("overlap_families: tau must be >= 1");
  if (tau > out.dist) throw std::domain_error("overlap_families: tau exceeds Delta");

  out.delta_overridden = opts.delta.has_value();
  out.delta = opts.delta ? effective_delta(*opts.delta) : resolve_delta(g).delta;
  out.degree_overridden = opts.max_degree.has_value();
  out.max_degree = opts.max_degree ? *opts.max_degree : g.max_degree();
  out.tau_check = validate_tau(out.dist, tau, out.delta, out.max_degree, mu);
  if (!out.tau_check.ok() && !opts.force) {
    throw std::domain_error("overlap_families: tau violates " + out.tau_check.failed());
  }
  out.family_bound = overlap_bound(out.dist, tau, g.node_count(), out.max_degree, out.delta, mu);

  out.segment_length = out.dist / tau;
  for (std::int32_t i = 0; i < tau; ++i) out.anchors.push_back(path[i * out.segment_length]);
  out.anchors.push_back(q);

  WitnessOptions wopts;
  wopts.delta = out.delta;
  wopts.max_degree = out.max_degree;
  wopts.bound_cap = out.family_bound.value;
  for (std::int32_t i = 0; i < tau; ++i) {
    out.segments.push_back(nested_witness_family(g, out.anchors[i], out.anchors[i + 1], mu, wopts));
    const Handedness h = out.segments.back().anchor == out.anchors[i] ? Handedness::Left : Handedness::Right;
    out.handedness.push_back(h);
    ++out.group_sizes[(i % 2) * 2 + (h == Handedness::Right ? 1 : 0)];
  }

  int best = 0;
  for (int k = 1; k < 4; ++k) {
    if (out.group_sizes[k] > out.group_sizes[best]) best = k;
  }
  out.group.parity = best / 2;
  out.group.hand = best % 2 ? Handedness::Right : Handedness::Left;
  for (std::int32_t i = 0; i < tau; ++i) {
    if (i % 2 == out.group.parity && out.handedness[i] == out.group.hand) {
      out.chosen.push_back(i);
      out.families.push_back(out.segments[i]);
      out.shortfall = out.shortfall || out.segments[i].shortfall;
    }
  }
  if (static_cast<std::int32_t>(out.families.size()) < out.min_families()) out.shortfall = true;
  return out;
}

struct OverlapPairCheck {
  std::int32_t family_a = 0;
  std::int32_t subset_a = 0;
  std::int32_t family_b = 0;
  std::int32_t subset_b = 0;
  bool ok = false;
};

/// Checks every pair of subsets drawn from different chosen families.
inline std::vector<OverlapPairCheck> overlap_matrix(const OverlapFamilySet& set) {
  std::vector<OverlapPairCheck> out;
  const auto& fams = set.families;
  for (std::size_t a = 0; a < fams.size(); ++a) {
    for (std::size_t b = a + 1; b < fams.size(); ++b) {
      for (std::size_t i = 0; i < fams[a].subsets.size(); ++i) {
        for (std::size_t j = 0; j < fams[b].subsets.size(); ++j) {
          out.push_back({static_cast<std::int32_t>(a), static_cast<std::int32_t>(i), static_cast<std::int32_t>(b),
                         static_cast<std::int32_t>(j),
                         verify_limited_overlap(fams[a].subsets[i], fams[b].subsets[j], set.dist, set.tau)});
        }
      }
    }
  }
  return out;
}

}  // namespace hyperex
