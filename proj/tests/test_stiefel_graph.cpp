#include <gtest/gtest.h>

#include "foliakit/dual_graph.hpp"
#include "foliakit/stiefel.hpp"
#include "support/graph_oracle.hpp"

using namespace foliakit;

TEST(Stiefel, Examples) {
  EXPECT_EQ(stiefel_pi(2, 5), GroupDesc::z());
  EXPECT_EQ(stiefel_pi(3, 5), GroupDesc::z2());
  EXPECT_EQ(stiefel_pi(3, 4), GroupDesc::z());
  EXPECT_EQ(stiefel_pi(2, 7), GroupDesc::z());
  EXPECT_THROW(stiefel_pi(3, 3), ContextInvalid);
  EXPECT_THROW(stiefel_pi(0, 3), ContextInvalid);
}

TEST(Homotopy, Examples) {
  EXPECT_EQ(homotopy_classes(1, 1, 3, Frame::Tangent), GroupDesc::trivial());
  EXPECT_EQ(homotopy_classes(2, 3, 8, Frame::Normal), GroupDesc::power(GroupDesc::z2(), 2));
  EXPECT_EQ(homotopy_classes(1, 2, 5, Frame::Tangent), GroupDesc::trivial());
  EXPECT_EQ(homotopy_classes(0, 3, 5, Frame::Normal), GroupDesc::trivial());
  EXPECT_EQ(homotopy_classes(1, 3, 5, Frame::Normal), GroupDesc::z2());
  EXPECT_EQ(to_string(GroupDesc::power(GroupDesc::z2(), 2)), "Z2^2");
  EXPECT_THROW(homotopy_classes(1, 3, 5, Frame::Tangent), OutOfTableRange);
}

TEST(Orientation, Examples) {
  auto path = alternating_orientation(make_dual_graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(std::get<std::vector<int>>(path), (std::vector<int>{1, -1, 1}));
  auto single = alternating_orientation(make_dual_graph(1, {}));
  EXPECT_EQ(std::get<std::vector<int>>(single), (std::vector<int>{1}));
  auto tri = alternating_orientation(make_dual_graph(3, {{0, 1}, {1, 2}, {2, 0}}));
  ASSERT_TRUE(std::holds_alternative<OddCycle>(tri));
  EXPECT_EQ(std::get<OddCycle>(tri).vertices.size(), 3u);
}

TEST(Orientation, DisconnectedAndOddWitness) {
  DualGraph g = make_dual_graph(8, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
  auto r = alternating_orientation(g);
  ASSERT_TRUE(std::holds_alternative<OddCycle>(r));
  EXPECT_TRUE(foliakit::testing::valid_odd_cycle(g, std::get<OddCycle>(r).vertices));
}

TEST(Orientation, AgreesWithBruteForce) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const DualGraph& g : foliakit::testing::connected_graphs(n)) {
      auto r = alternating_orientation(g);
      EXPECT_EQ(std::holds_alternative<std::vector<int>>(r), foliakit::testing::brute_force_bipartite(g));
    }
  }
}

TEST(Orientation, Errors) {
  EXPECT_THROW(make_dual_graph(2, {{0, 0}}), GraphError);
  EXPECT_THROW(make_dual_graph(2, {{0, 2}}), GraphError);
  EXPECT_THROW(parse_edge_list("x"), GraphError);
  EXPECT_THROW(parse_edge_list("3\n0 1 2\n"), GraphError);
  EXPECT_EQ(parse_edge_list("3\n0 1\n\n1 2\n").edges.size(), 2u);
}
