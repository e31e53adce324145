#include <gtest/gtest.h>

#include "hyperex/generators.hpp"
#include "hyperex/hyperbolicity.hpp"

using namespace hyperex;

TEST(SplitMix, ReferenceOutputs) {
  // Published SplitMix64 outputs for seed 1234567.
  gen::SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.next(), 9817491932198370423ULL);
}

TEST(Families, Shapes) {
  EXPECT_EQ(gen::path(6).edge_count(), 5u);
  EXPECT_EQ(gen::cycle(6).edge_count(), 6u);
  EXPECT_EQ(gen::complete(5).edge_count(), 10u);
  EXPECT_EQ(gen::star(5).max_degree(), 5);
  EXPECT_EQ(gen::balanced_tree(2, 3).node_count(), 15);
  EXPECT_EQ(gen::grid(3, 4).edge_count(), 17u);
  EXPECT_EQ(regular_degree(gen::hypercube(4)), 4);
  EXPECT_EQ(regular_degree(gen::ring_of_cliques(5, 5)), 4);
  EXPECT_EQ(gen::theta(2, 2, 6).node_count(), 9);
  EXPECT_EQ(bfs_distances(gen::necklace(5), 0)[15], 10);
  EXPECT_EQ(gen::caterpillar(65).node_count(), 65 + 63);
  EXPECT_EQ(gen::caterpillar(65).max_degree(), 3);
  const Graph adv = gen::adversarial_uumv(3);
  EXPECT_EQ(adv.node_count(), 23);
  EXPECT_EQ(bfs_distances(adv, 0)[22], 10);
}

TEST(Families, HyperbolicityFacts) {
  EXPECT_EQ(delta_exact(gen::path(6)).delta, HalfInteger::from_int(0));
  EXPECT_EQ(delta_exact(gen::cycle(6)).delta, HalfInteger::from_int(1));
  EXPECT_EQ(delta_exact(gen::balanced_tree(3, 3)).delta, HalfInteger::from_int(0));
  EXPECT_EQ(delta_exact(gen::complete(7)).delta, HalfInteger::from_int(0));
}

TEST(Families, EdgeListRoundTripKeepsIds) {
  const std::vector<Graph> graphs = {
      gen::path(7),          gen::cycle(9),         gen::complete(5),    gen::star(4),
      gen::balanced_tree(3, 3), gen::grid(4, 5),    gen::hypercube(4),   gen::theta(2, 2, 6),
      gen::theta(1, 3, 4),   gen::ring_of_cliques(4, 5), gen::necklace(4), gen::caterpillar(9),
      gen::adversarial_uumv(3), gen::erdos_renyi(30, Ratio(1, 10), 5)};
  for (const Graph& g : graphs) {
    const Graph h = load_graph(g.to_edge_list());
    EXPECT_EQ(h.node_count(), g.node_count());
    EXPECT_EQ(h.edges(), g.edges());
  }
}

TEST(ErdosRenyi, DeterministicAndConnected) {
  const Graph a = gen::erdos_renyi(40, Ratio(1, 10), 7);
  const Graph b = gen::erdos_renyi(40, Ratio(1, 10), 7);
  EXPECT_EQ(a.edges(), b.edges());
  EXPECT_EQ(a.to_edge_list(), b.to_edge_list());
  const Graph c = gen::erdos_renyi(40, Ratio(1, 10), 8);
  EXPECT_NE(a.edges(), c.edges());
  EXPECT_EQ(gen::erdos_renyi(10, Ratio(1), 1).edge_count(), 45u);
  EXPECT_EQ(gen::erdos_renyi(10, Ratio(0), 1).node_count(), 1);
}

TEST(Dispatch, ByName) {
  EXPECT_EQ(gen::generate("path", {{"n", "6"}}).edges(), gen::path(6).edges());
  EXPECT_EQ(gen::generate("theta", {{"a", "2"}, {"b", "2"}, {"c", "6"}}).edges(), gen::theta(2, 2, 6).edges());
  EXPECT_EQ(gen::generate("erdos-renyi", {{"n", "20"}, {"p", "0.2"}}, 3).edges(),
            gen::erdos_renyi(20, Ratio(1, 5), 3).edges());
  EXPECT_THROW(gen::generate("nope", {}), std::domain_error);
  EXPECT_THROW(gen::generate("path", {}), std::domain_error);
  EXPECT_THROW(gen::generate("path", {{"n", "x"}}), std::domain_error);
  EXPECT_THROW(gen::theta(1, 1, 3), std::domain_error);
  EXPECT_THROW(gen::cycle(2), std::domain_error);
}
