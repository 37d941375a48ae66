#include <gtest/gtest.h>

#include <random>

#include "recolour/connect.hpp"
#include "recolour/errors.hpp"
#include "recolour/generators.hpp"
#include "recolour/oracle.hpp"
#include "support.hpp"

using namespace recolour;

namespace {

Colouring colours(int k, std::vector<Colour> cs) {
  Colouring c(k);
  for (std::size_t i = 0; i < cs.size(); ++i) c.set(static_cast<Vertex>(i + 1), cs[i]);
  return c;
}

}  // namespace

TEST(Connect, PathSwap) {
  Graph p = path_graph(3);
  Colouring a = colours(3, {1, 2, 1}), b = colours(3, {2, 1, 2});
  Sequence s = connect_colourings(p, 1, 3, a, b);
  EXPECT_EQ(testsupport::replay_errors(p, s, b), "");
  EXPECT_GE(s.length(), 4u);
  EXPECT_EQ(testsupport::naive_distance(p, 3, a, b), 4);
}

TEST(Connect, CycleFiveColours) {
  Graph c4 = cycle_graph(4);
  Colouring a = colours(5, {1, 2, 1, 2}), b = colours(5, {3, 4, 3, 4});
  Sequence s = connect_colourings(c4, 2, 5, a, b);
  EXPECT_EQ(testsupport::replay_errors(c4, s, b), "");
  EXPECT_EQ(testsupport::naive_distance(c4, 5, a, b), 4);
  EXPECT_GE(s.length(), 4u);
}

TEST(Connect, EqualEndpoints) {
  Graph p = path_graph(5);
  Colouring a = colours(3, {1, 2, 3, 1, 2});
  EXPECT_EQ(connect_colourings(p, 1, 3, a, a).length(), 0u);
}

TEST(Connect, Preconditions) {
  Graph p = path_graph(3);
  EXPECT_THROW(connect_colourings(p, 1, 2, colours(2, {1, 2, 1}), colours(2, {2, 1, 2})), PaletteTooSmall);
  Graph k4 = complete_graph(4);
  EXPECT_THROW(connect_colourings(k4, 2, 5, colours(5, {1, 2, 3, 4}), colours(5, {2, 3, 4, 5})),
               NotDegenerateEnough);
  ConnectBudget tiny;
  tiny.hard_cap = 2;
  ConnectStats stats;
  EXPECT_THROW(connect_colourings(p, 1, 3, colours(3, {1, 2, 1}), colours(3, {2, 1, 2}), tiny, &stats),
               HardCapExceeded);
}

TEST(ConnectProperty, AgainstBruteForceDistance) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 60; ++round) {
    int d = 1 + static_cast<int>(round % 2);
    int k = 2 * d + 1 + static_cast<int>(rng() % 2);
    Graph g = random_degenerate_graph(4 + static_cast<int>(rng() % 3), d, rng());
    Colouring a = random_proper_colouring(g, k, rng());
    Colouring b = random_proper_colouring(g, k, rng());
    ConnectStats stats;
    Sequence s = connect_colourings(g, d, k, a, b, {}, &stats);
    EXPECT_EQ(testsupport::replay_errors(g, s, b), "");
    auto best = testsupport::naive_distance(g, k, a, b);
    ASSERT_TRUE(best.has_value());
    EXPECT_GE(static_cast<int>(s.length()), *best);
    EXPECT_EQ(stats.length, s.length());
  }
}

TEST(ConnectProperty, GridsFiveColours) {
  for (int side = 3; side <= 10; ++side) {
    Graph g = grid_graph(side, side);
    Colouring a = random_proper_colouring(g, 5, side);
    Colouring b = random_proper_colouring(g, 5, side + 100);
    ConnectStats stats;
    Sequence s = connect_colourings(g, 2, 5, a, b, {}, &stats);
    EXPECT_EQ(testsupport::replay_errors(g, s, b), "");
    EXPECT_DOUBLE_EQ(stats.soft_bound, 50.0 * g.n() * g.n());
  }
}

TEST(Oracle, SmallInstances) {
  Graph p = path_graph(3);
  Colouring a = colours(3, {1, 2, 1}), b = colours(3, {2, 1, 2});
  auto s = shortest_sequence(p, 3, a, b);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->length(), 4u);
  EXPECT_EQ(testsupport::replay_errors(p, *s, b), "");
  EXPECT_EQ(shortest_sequence(p, 3, a, a)->length(), 0u);

  Graph k3 = complete_graph(3);
  EXPECT_FALSE(shortest_sequence(k3, 3, colours(3, {1, 2, 3}), colours(3, {2, 1, 3})).has_value());

  StateSpaceLimits small;
  small.max_states = 10;
  EXPECT_THROW(shortest_sequence(p, 3, a, b, small), TooLarge);
}

TEST(Oracle, ReconfigurationSummaries) {
  auto frozen = component_and_diameter(complete_graph(3), 3);
  EXPECT_EQ(frozen.proper_colourings, 6u);
  EXPECT_EQ(frozen.components, 6u);
  EXPECT_FALSE(frozen.connected);
  EXPECT_FALSE(frozen.diameter.has_value());

  auto k2 = component_and_diameter(complete_graph(2), 3);
  EXPECT_EQ(k2.proper_colourings, 6u);
  EXPECT_TRUE(k2.connected);
  EXPECT_EQ(k2.diameter, 3);

  auto k1 = component_and_diameter(Graph::with_vertices(1), 2);
  EXPECT_EQ(k1.diameter, 1);
}

// The library BFS and the map-based reference agree on every pair of proper
// colourings of a few small graphs.
TEST(OracleProperty, MatchesReferenceBfs) {
  std::vector<std::pair<Graph, int>> cases{
      {path_graph(3), 3}, {cycle_graph(4), 3}, {star_graph(3), 3}, {complete_graph(3), 4}};
  for (const auto& [g, k] : cases) {
    auto all = testsupport::all_proper_colourings(g, k);
    auto summary = component_and_diameter(g, k);
    EXPECT_EQ(summary.proper_colourings, all.size());
    int diameter = 0;
    bool connected = true;
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        auto ref = testsupport::naive_distance(g, k, all[i], all[j]);
        auto got = shortest_sequence(g, k, all[i], all[j]);
        ASSERT_EQ(ref.has_value(), got.has_value());
        if (!ref) {
          connected = false;
          continue;
        }
        EXPECT_EQ(static_cast<int>(got->length()), *ref);
        diameter = std::max(diameter, *ref);
      }
    }
    EXPECT_EQ(summary.connected, connected);
    if (connected) EXPECT_GE(*summary.diameter, diameter);
  }
}
