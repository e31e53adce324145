#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace hyperex::gen {

/// SplitMix64 (Steele, Lea, Flood 2014). Outputs are identical on every
/// platform for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::domain_error("generator: " + msg);
}

inline Graph path(NodeId n) {
  require(n >= 1, "path needs n >= 1");
  EdgeList e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(NodeId n) {
  require(n >= 3, "cycle needs n >= 3");
  EdgeList e;
  for (NodeId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete(NodeId n) {
  require(n >= 1, "complete needs n >= 1");
  EdgeList e;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph::from_edges(n, e);
}

/// Center 0 with `leaves` leaves.
inline Graph star(NodeId leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  EdgeList e;
  for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

/// Complete `branching`-ary tree of the given depth, nodes in BFS order.
inline Graph balanced_tree(std::int32_t branching, std::int32_t depth) {
  require(branching >= 1 && depth >= 0, "balanced_tree needs branching >= 1, depth >= 0");
  std::int64_t n = 1, level = 1;
  for (std::int32_t i = 0; i < depth; ++i) {
    level *= branching;
    n += level;
    require(n <= 5'000'000, "balanced_tree too large");
  }
  EdgeList e;
  for (std::int64_t v = 1; v < n; ++v) e.emplace_back(static_cast<NodeId>((v - 1) / branching), static_cast<NodeId>(v));
  return Graph::from_edges(static_cast<NodeId>(n), e);
}

inline Graph grid(std::int32_t rows, std::int32_t cols) {
  require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
  EdgeList e;
  for (std::int32_t r = 0; r < rows; ++r) {
    for (std::int32_t c = 0; c < cols; ++c) {
      const NodeId v = r * cols + c;
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, v + cols);
    }
  }
  return Graph::from_edges(rows * cols, e);
}

inline Graph hypercube(std::int32_t dim) {
  require(dim >= 1 && dim <= 20, "hypercube needs 1 <= dim <= 20");
  const NodeId n = NodeId{1} << dim;
  EdgeList e;
  for (NodeId v = 0; v < n; ++v) {
    for (std::int32_t b = 0; b < dim; ++b) {
      if (!(v >> b & 1)) e.emplace_back(v, v | (1 << b));
    }
  }
  return Graph::from_edges(n, e);
}

/// Three internally disjoint paths of lengths a, b, c between node 0 and the
/// last node.
inline Graph theta(std::int32_t a, std::int32_t b, std::int32_t c) {
  const std::vector<std::int32_t> lens{a, b, c};
  require(a >= 1 && b >= 1 && c >= 1, "theta path lengths must be >= 1");
  require(std::count(lens.begin(), lens.end(), 1) <= 1, "theta allows at most one direct edge");
  const NodeId t = a + b + c - 2;
  EdgeList e;
  NodeId next = 1;
  for (std::int32_t len : lens) {
    NodeId prev = 0;
    for (std::int32_t i = 1; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, t);
  }
  return Graph::from_edges(t + 1, e);
}

/// k copies of K_size in a ring. Each clique drops the edge between its
/// first and last node, and the last node of clique i links to the first of
/// clique i+1, so every node keeps degree size-1.
inline Graph ring_of_cliques(std::int32_t k, std::int32_t size) {
  require(k >= 3 && size >= 3, "ring_of_cliques needs k >= 3 and size >= 3");
  EdgeList e;
  for (std::int32_t i = 0; i < k; ++i) {
    const NodeId base = i * size;
    for (std::int32_t a = 0; a < size; ++a) {
      for (std::int32_t b = a + 1; b < size; ++b) {
        if (a == 0 && b == size - 1) continue;
        e.emplace_back(base + a, base + b);
      }
    }
    e.emplace_back(base + size - 1, ((i + 1) % k) * size);
  }
  return Graph::from_edges(k * size, e);
}

/// k four-cycles glued in a chain at opposite corners. Corner i is node 3i;
/// the two middle nodes of bead i are 3i+1 and 3i+2.
inline Graph necklace(std::int32_t k) {
  require(k >= 1, "necklace needs k >= 1");
  EdgeList e;
  for (std::int32_t i = 0; i < k; ++i) {
    const NodeId a = 3 * i, x = a + 1, y = a + 2, b = a + 3;
    e.emplace_back(a, x);
    e.emplace_back(a, y);
    e.emplace_back(x, b);
    e.emplace_back(y, b);
  }
  return Graph::from_edges(3 * k + 1, e);
}

/// Path 0..spine-1 with one pendant leaf on every interior spine node.
inline Graph caterpillar(std::int32_t spine) {
  require(spine >= 2, "caterpillar needs spine >= 2");
  EdgeList e;
  for (NodeId i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
  NodeId next = spine;
  for (NodeId i = 1; i + 1 < spine; ++i) e.emplace_back(i, next++);
  return Graph::from_edges(next, e);
}

/// G(n, p) with SplitMix64: pair (i, j), i < j, in lexicographic order is
/// an edge when the next uniform draw is below p. Returns the largest
/// component (the one reached first on ties), renumbered in BFS order from
/// its smallest node with neighbors visited in ascending order.
inline Graph erdos_renyi(NodeId n, const Ratio& p, std::uint64_t seed) {
  require(n >= 1, "erdos_renyi needs n >= 1");
  require(p >= Ratio(0) && p <= Ratio(1), "erdos_renyi needs 0 <= p <= 1");
  SplitMix64 rng(seed);
  const double pd = p.to_double();
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (rng.uniform() < pd) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  // Components in BFS order; adjacency lists are already ascending.
  std::vector<char> seen(n, 0);
  std::vector<NodeId> best;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<NodeId> order{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (NodeId w : adj[order[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
    if (order.size() > best.size()) best = std::move(order);
  }
  std::vector<NodeId> relabel(n, -1);
  for (std::size_t i = 0; i < best.size(); ++i) relabel[best[i]] = static_cast<NodeId>(i);
  EdgeList e;
  for (NodeId u : best) {
    for (NodeId w : adj[u]) {
      if (u < w && relabel[w] >= 0) e.emplace_back(relabel[u], relabel[w]);
    }
  }
  return Graph::from_edges(static_cast<NodeId>(best.size()), e);
}

/// Hard case for greedy routing: s (node 0) reaches the first gadget over a
/// bridge, then `gadgets` gadgets in series end at t (the last node). Each
/// gadget has a short route entry-x-y-exit and two detours entry-x-a-b-exit
/// and entry-c-d-y-exit. Two edge-disjoint routes exist through every
/// gadget, but only by avoiding the short route.
inline Graph adversarial_uumv(std::int32_t gadgets) {
  require(gadgets >= 1, "adversarial_uumv needs at least one gadget");
  EdgeList e;
  e.emplace_back(0, 1);
  NodeId entry = 1;
  for (std::int32_t i = 0; i < gadgets; ++i) {
    const NodeId x = entry + 1, y = entry + 2, a = entry + 3, b = entry + 4, c = entry + 5, d = entry + 6;
    const NodeId exit = entry + 7;
    e.emplace_back(entry, x);
    e.emplace_back(x, y);
    e.emplace_back(y, exit);
    e.emplace_back(x, a);
    e.emplace_back(a, b);
    e.emplace_back(b, exit);
    e.emplace_back(entry, c);
    e.emplace_back(c, d);
    e.emplace_back(d, y);
    entry = exit;
  }
  return Graph::from_edges(entry + 1, e);
}

using Params = std::map<std::string, std::string>;

inline std::int64_t int_param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::domain_error("generator: missing parameter --" + key);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    throw std::domain_error("generator: parameter --" + key + " is not an integer");
  }
}

inline std::vector<std::string> family_names() {
  return {"adversarial", "balanced-tree", "caterpillar", "complete", "cycle", "erdos-renyi", "grid",
          "hypercube",   "necklace",      "path",        "ring-of-cliques", "star", "theta"};
}

/// Builds a named family from string parameters.
inline Graph generate(const std::string& family, const Params& p, std::uint64_t seed = 0) {
  auto i = [&](const char* k) { return static_cast<std::int32_t>(int_param(p, k)); };
  if (family == "path") return path(i("n"));
  if (family == "cycle") return cycle(i("n"));
  if (family == "complete") return complete(i("n"));
  if (family == "star") return star(i("n"));
  if (family == "balanced-tree") return balanced_tree(i("branching"), i("depth"));
  if (family == "grid") return grid(i("rows"), i("cols"));
  if (family == "hypercube") return hypercube(i("dim"));
  if (family == "theta") return theta(i("a"), i("b"), i("c"));
  if (family == "ring-of-cliques") return ring_of_cliques(i("k"), i("size"));
  if (family == "necklace") return necklace(i("k"));
  if (family == "caterpillar") return caterpillar(i("n"));
  if (family == "adversarial") return adversarial_uumv(i("k"));
  if (family == "erdos-renyi") {
    auto it = p.find("p");
    if (it == p.end()) throw std::domain_error("generator: missing parameter --p");
    return erdos_renyi(i("n"), parse_ratio(it->second), seed);
  }
  throw std::domain_error("generator: unknown family '" + family + "'");
}

}  // namespace hyperex::gen
