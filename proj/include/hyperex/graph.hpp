#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <tuple>
#include <vector>

namespace hyperex {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

/// Undirected edge in canonical orientation (u < v).
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  Edge() = default;
  Edge(NodeId a, NodeId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Thrown when an input document does not describe a simple connected graph.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted duplicate-free set of node ids.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }
  NodeSet(std::initializer_list<NodeId> ids) : NodeSet(std::vector<NodeId>(ids)) {}

  static NodeSet from_mask(const std::vector<char>& mask) {
    NodeSet s;
    for (NodeId i = 0; i < static_cast<NodeId>(mask.size()); ++i) {
      if (mask[i]) s.ids_.push_back(i);
    }
    return s;
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(NodeId u) const { return std::binary_search(ids_.begin(), ids_.end(), u); }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<NodeId>& ids() const { return ids_; }

  std::vector<char> mask(std::size_t n) const {
    std::vector<char> m(n, 0);
    for (NodeId u : ids_) m[u] = 1;
    return m;
  }

  bool is_subset_of(const NodeSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  friend auto operator<=>(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> ids_;
};

inline NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  std::vector<NodeId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NodeSet(std::move(out));
}

inline NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NodeSet(std::move(out));
}

inline NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
  std::vector<NodeId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NodeSet(std::move(out));
}

/// Immutable simple, undirected, connected graph in CSR form.
///
/// Adjacency lists are sorted by neighbor id. Edge ids index the
/// lexicographically sorted canonical edge list.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on nodes [0, n). Duplicate edges are dropped; self-loops
  /// and disconnected inputs are rejected.
  static Graph from_edges(NodeId n, EdgeList edges, std::vector<std::int64_t> labels = {}) {
    if (n <= 0) throw GraphError("graph must have at least one node");
    for (const Edge& e : edges) {
      if (e.u == e.v) throw GraphError("self-loop at node " + std::to_string(e.u));
      if (e.u < 0 || e.v >= n) throw GraphError("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    if (labels.empty()) {
      labels.resize(n);
      for (NodeId i = 0; i < n; ++i) labels[i] = i;
    }
    g.labels_ = std::move(labels);

    std::vector<std::int32_t> deg(n, 0);
    for (const Edge& e : g.edges_) {
      ++deg[e.u];
      ++deg[e.v];
    }
    g.offsets_.assign(n + 1, 0);
    for (NodeId i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.targets_.assign(g.offsets_[n], 0);
    g.arc_edge_.assign(g.offsets_[n], 0);
    std::vector<std::int32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId id = 0; id < static_cast<EdgeId>(g.edges_.size()); ++id) {
      const Edge& e = g.edges_[id];
      g.targets_[fill[e.u]] = e.v;
      g.arc_edge_[fill[e.u]++] = id;
      g.targets_[fill[e.v]] = e.u;
      g.arc_edge_[fill[e.v]++] = id;
    }
    // Edges are visited in (u, v) order, so each list is already sorted for
    // neighbors larger than the owner; a sort keeps the whole list ordered.
    for (NodeId u = 0; u < n; ++u) {
      std::vector<std::pair<NodeId, EdgeId>> tmp;
      for (auto i = g.offsets_[u]; i < g.offsets_[u + 1]; ++i) tmp.emplace_back(g.targets_[i], g.arc_edge_[i]);
      std::sort(tmp.begin(), tmp.end());
      for (std::size_t k = 0; k < tmp.size(); ++k) {
        g.targets_[g.offsets_[u] + k] = tmp[k].first;
        g.arc_edge_[g.offsets_[u] + k] = tmp[k].second;
      }
    }
    g.check_connected();
    return g;
  }

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  /// Edge ids parallel to neighbors(u).
  std::span<const EdgeId> incident_edges(NodeId u) const {
    return {arc_edge_.data() + offsets_[u], arc_edge_.data() + offsets_[u + 1]};
  }

  std::int32_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  std::int32_t max_degree() const {
    std::int32_t d = 0;
    for (NodeId u = 0; u < n_; ++u) d = std::max(d, degree(u));
    return d;
  }

  const EdgeList& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::optional<EdgeId> edge_id(NodeId a, NodeId b) const {
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return arc_edge_[offsets_[a] + (it - nb.begin())];
  }

  bool adjacent(NodeId a, NodeId b) const { return edge_id(a, b).has_value(); }

  /// Original input label of each dense node id.
  const std::vector<std::int64_t>& labels() const { return labels_; }

  /// Serializes to the edge-list text format using dense ids. Lines are
  /// ordered by larger endpoint, so when every node v > 0 has a smaller
  /// neighbor, reloading reproduces the same ids.
  std::string to_edge_list() const {
    EdgeList order = edges_;
    std::sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.v, a.u) < std::tie(b.v, b.u);
    });
    std::ostringstream out;
    for (const Edge& e : order) out << e.u << ' ' << e.v << '\n';
    return out.str();
  }

 private:
  void check_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    for (NodeId u = 0; u < n_; ++u) {
      if (!seen[u]) {
        throw GraphError("graph is disconnected: node " + std::to_string(labels_[0]) +
                         " cannot reach node " + std::to_string(labels_[u]));
      }
    }
  }

  NodeId n_ = 0;
  EdgeList edges_;
  std::vector<std::int64_t> labels_;
  std::vector<std::int32_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<EdgeId> arc_edge_;
};

inline std::int64_t detail_parse_label(const std::string& token) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a non-negative integer");
  }
  return std::stoll(token);
}

/// Parses the edge-list text format: one edge per line as two non-negative
/// integer tokens, '#' comment lines and blank lines ignored. Labels are
/// compacted to [0, n) in order of first appearance.
inline Graph load_graph(std::string_view text) {
  std::unordered_map<std::int64_t, NodeId> ids;
  std::vector<std::int64_t> labels;
  EdgeList edges;
  auto intern = [&](std::int64_t label) {
    auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw GraphError("line " + std::to_string(line_no) + ": expected two integer tokens");
    }
    std::int64_t la = 0, lb = 0;
    try {
      la = detail_parse_label(a);
      lb = detail_parse_label(b);
    } catch (const std::exception&) {
      throw GraphError("line " + std::to_string(line_no) + ": expected two integer tokens");
    }
    if (la == lb) throw GraphError("line " + std::to_string(line_no) + ": self-loop at node " + a);
    const NodeId u = intern(la);
    const NodeId v = intern(lb);
    edges.emplace_back(u, v);
  }
  if (labels.empty()) throw GraphError("empty input: no edges");
  const auto n = static_cast<NodeId>(labels.size());
  return Graph::from_edges(n, std::move(edges), std::move(labels));
}

}  // namespace hyperex
