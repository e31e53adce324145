#include <gtest/gtest.h>

#include "hyperex/generators.hpp"
#include "hyperex/graph.hpp"
#include "hyperex/graph_ops.hpp"

using namespace hyperex;

namespace {

const Graph p6 = gen::path(6);
const Graph c8 = gen::cycle(8);
const Graph k4 = gen::complete(4);

}  // namespace

TEST(Load, PathAndDedup) {
  const Graph p3 = load_graph("0 1\n1 2");
  EXPECT_EQ(p3.node_count(), 3);
  EXPECT_EQ(p3.edge_count(), 2u);
  const Graph c3 = load_graph("0 1\n1 2\n2 0\n0 1");
  EXPECT_EQ(c3.edge_count(), 3u);
}

TEST(Load, CommentsAndLabelCompaction) {
  const Graph g = load_graph("# header\n\n10 20\n20 5\n");
  EXPECT_EQ(g.node_count(), 3);
  EXPECT_EQ(g.labels(), (std::vector<std::int64_t>{10, 20, 5}));
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
}

TEST(Load, Rejections) {
  EXPECT_THROW(load_graph("0 1\n2 3"), GraphError);
  EXPECT_THROW(load_graph("0 0"), GraphError);
  EXPECT_THROW(load_graph("# nothing\n"), GraphError);
  EXPECT_THROW(load_graph("0 1 2"), GraphError);
  EXPECT_THROW(load_graph("0 a"), GraphError);
  EXPECT_THROW(load_graph("-1 2"), GraphError);
  try {
    load_graph("0 1\n2 3");
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("0"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(Load, RoundTrip) {
  const Graph g = gen::grid(3, 4);
  const Graph h = load_graph(g.to_edge_list());
  EXPECT_EQ(g.edges(), h.edges());
}

TEST(Bfs, Distances) {
  EXPECT_EQ(bfs_distances(p6, 0), (std::vector<std::int32_t>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(bfs_distances(c8, 0), (std::vector<std::int32_t>{0, 1, 2, 3, 4, 3, 2, 1}));
  EXPECT_EQ(bfs_distances(k4, 2), (std::vector<std::int32_t>{1, 1, 0, 1}));
  EXPECT_THROW(bfs_distances(k4, 9), std::domain_error);
}

TEST(Bfs, CanonicalPath) {
  EXPECT_EQ(canonical_shortest_path(p6, 0, 5).nodes, (std::vector<NodeId>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(canonical_shortest_path(gen::cycle(4), 0, 2).nodes, (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(canonical_shortest_path(k4, 1, 3).nodes, (std::vector<NodeId>{1, 3}));
  EXPECT_THROW(canonical_shortest_path(k4, 1, 1), std::domain_error);
}

TEST(Bfs, CanonicalPathIsGeodesicOnGrids) {
  const Graph g = gen::grid(5, 7);
  const auto d0 = bfs_distances(g, 0);
  for (NodeId v = 1; v < g.node_count(); ++v) {
    const auto path = canonical_shortest_path(g, 0, v);
    ASSERT_EQ(path.length(), d0[v]);
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) ASSERT_TRUE(g.adjacent(path[i], path[i + 1]));
  }
}

TEST(Sets, BallBoundaryCut) {
  EXPECT_EQ(ball(k4, 3, 0), NodeSet({3}));
  EXPECT_EQ(ball(p6, 0, 2), NodeSet({0, 1, 2}));
  EXPECT_EQ(ball(c8, 0, 3), NodeSet({0, 1, 2, 3, 5, 6, 7}));
  EXPECT_EQ(boundary(k4, NodeSet{0}), NodeSet({1, 2, 3}));
  EXPECT_EQ(boundary(p6, NodeSet{0, 1, 2}), NodeSet({3}));
  EXPECT_TRUE(boundary(p6, NodeSet{0, 1, 2, 3, 4, 5}).empty());
  EXPECT_EQ(cut_edge_set(k4, NodeSet{0}).size(), 3u);
  EXPECT_EQ(cut_edge_set(c8, NodeSet{0, 1, 2, 3}), (EdgeList{Edge(0, 7), Edge(3, 4)}));
  EXPECT_TRUE(cut_edge_set(c8, NodeSet{}).empty());
}

TEST(Sets, Expansions) {
  EXPECT_EQ(node_expansion(k4, NodeSet{0}), Ratio(3));
  EXPECT_EQ(node_expansion(p6, NodeSet{0, 1, 2}), Ratio(1, 3));
  EXPECT_EQ(node_expansion(c8, NodeSet{0, 1, 2, 3}), Ratio(1, 2));
  EXPECT_EQ(edge_expansion(k4, NodeSet{0}), Ratio(3));
  EXPECT_EQ(edge_expansion(p6, NodeSet{0, 1, 2}), Ratio(1, 3));
  EXPECT_EQ(edge_expansion(c8, NodeSet{0, 1, 2, 3}), Ratio(1, 2));
  EXPECT_EQ(normalized_expansion(k4, NodeSet{0}), Ratio(1));
  EXPECT_EQ(normalized_expansion(c8, NodeSet{0, 1, 2, 3}), Ratio(1, 4));
  EXPECT_EQ(normalized_expansion(p6, NodeSet{0}), Ratio(1));
  EXPECT_THROW(node_expansion(p6, NodeSet{}), std::domain_error);
  EXPECT_THROW(node_expansion(p6, NodeSet{0, 1, 2, 3}), std::domain_error);
}

TEST(Sets, CutEdgesBoundEdgeExpansion) {
  // |cut| >= |boundary| always, so edge expansion dominates node expansion.
  const Graph g = gen::grid(4, 4);
  for (std::uint32_t m = 1; m < (1u << 16); m += 37) {
    std::vector<char> mask(16);
    for (int i = 0; i < 16; ++i) mask[i] = (m >> i) & 1;
    const NodeSet s = NodeSet::from_mask(mask);
    if (s.size() > 8) continue;
    EXPECT_GE(edge_expansion(g, s), node_expansion(g, s));
  }
}

TEST(Diameter, Pairs) {
  const auto a = diameter_pair(p6);
  EXPECT_EQ(std::tuple(a.p, a.q, a.diameter), std::tuple(0, 5, 5));
  const auto b = diameter_pair(c8);
  EXPECT_EQ(std::tuple(b.p, b.q, b.diameter), std::tuple(0, 4, 4));
  const auto c = diameter_pair(k4);
  EXPECT_EQ(std::tuple(c.p, c.q, c.diameter), std::tuple(0, 1, 1));
}

TEST(Removal, Components) {
  const auto h = remove_nodes(p6, NodeSet{3});
  EXPECT_EQ(h.components(), (std::vector<NodeSet>{NodeSet{0, 1, 2}, NodeSet{4, 5}}));
  EXPECT_FALSE(h.distance(0, 5).has_value());
  EXPECT_EQ(remove_nodes(c8, NodeSet{2}).distance(0, 4), 4);
  const auto same = remove_nodes(c8, NodeSet{});
  for (NodeId v = 0; v < 8; ++v) EXPECT_EQ(same.distance(0, v), bfs_distances(c8, 0)[v]);
  EXPECT_THROW(remove_nodes(k4, NodeSet{0, 1, 2, 3}), std::domain_error);
}

TEST(Degrees, Excluding) {
  EXPECT_EQ(max_degree_excluding(gen::star(5), NodeSet{0}), 1);
  EXPECT_EQ(max_degree_excluding(c8, NodeSet{}), 2);
  EXPECT_EQ(max_degree_excluding(p6, NodeSet{0, 5}), 2);
  EXPECT_EQ(regular_degree(c8), 2);
  EXPECT_FALSE(regular_degree(p6).has_value());
}
