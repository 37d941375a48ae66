#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "recolour/errors.hpp"
#include "recolour/generators.hpp"
#include "recolour/ordering.hpp"
#include "recolour/reduce_degenerate.hpp"
#include "recolour/reduce_mad.hpp"
#include "support.hpp"

using namespace recolour;

namespace {

Colouring colours(int k, std::vector<Colour> cs) {
  Colouring c(k);
  for (std::size_t i = 0; i < cs.size(); ++i) c.set(static_cast<Vertex>(i + 1), cs[i]);
  return c;
}

}  // namespace

TEST(ReduceDegenerate, StarTrace) {
  Graph star = star_graph(3);
  DegeneracyOrder sigma{{1, 2, 3, 4}, 1};
  DegenerateRecolourer r(star, 1, colours(3, {3, 1, 2, 1}), sigma);
  EXPECT_EQ(r.recolour_vertex(0), 3u);
  Sequence s = r.sequence();
  ASSERT_EQ(s.length(), 3u);
  EXPECT_EQ(s.moves[0], Move(2, 1, 2));
  EXPECT_EQ(s.moves[1], Move(4, 1, 2));
  EXPECT_EQ(s.moves[2], Move(1, 3, 1));
  EXPECT_EQ(testsupport::replay_errors(star, s, colours(3, {1, 2, 2, 2})), "");
}

TEST(ReduceDegenerate, FreeColourGivesOneMove) {
  Graph p = path_graph(3);
  DegeneracyOrder sigma = degeneracy_ordering(p);
  DegenerateRecolourer r(p, 1, colours(3, {1, 2, 3}), sigma);
  // The last vertex of the order has at most k earlier neighbours.
  EXPECT_EQ(r.recolour_vertex(r.size() - 1), 1u);
}

TEST(ReduceDegenerate, PathSingleMove) {
  Graph p = path_graph(3);
  Colouring alpha = colours(3, {1, 2, 3});
  Sequence s = reduce_one_colour_degenerate(p, 1, alpha, degeneracy_ordering(p));
  ASSERT_EQ(s.length(), 1u);
  EXPECT_EQ(s.moves[0], Move(3, 3, 1));
  EXPECT_EQ(s.end(), colours(3, {1, 2, 1}));
  // Colour 3 must change somewhere, so one move is optimal.
  EXPECT_EQ(testsupport::naive_distance(p, 3, alpha, s.end()), 1);
}

TEST(ReduceDegenerate, CompleteGraphUniqueFreeColour) {
  Graph k4 = complete_graph(4);
  Sequence s = reduce_one_colour_degenerate(k4, 3, colours(5, {1, 2, 3, 5}), degeneracy_ordering(k4));
  ASSERT_EQ(s.length(), 1u);
  EXPECT_EQ(s.moves[0], Move(4, 5, 4));
}

TEST(ReduceDegenerate, NothingToRemove) {
  Graph p = path_graph(3);
  EXPECT_EQ(reduce_one_colour_degenerate(p, 1, colours(3, {1, 2, 1}), degeneracy_ordering(p)).length(), 0u);
}

TEST(ReduceDegenerate, Preconditions) {
  Graph k4 = complete_graph(4);
  EXPECT_THROW(DegenerateRecolourer(k4, 2, colours(4, {1, 2, 3, 4}), degeneracy_ordering(k4)),
               WidthExceeded);
  EXPECT_THROW(DegenerateRecolourer(k4, 3, colours(4, {1, 2, 3, 4}), degeneracy_ordering(k4)),
               PaletteTooSmall);
  EXPECT_THROW(DegenerateRecolourer(k4, 3, colours(5, {1, 1, 3, 4}), degeneracy_ordering(k4)),
               CertificateError);
}

// Per-call guarantees re-derived from the move log: nothing before h moves,
// h moves exactly once, and the whole run fits 4 n^2 prod deg(u).
TEST(ReduceDegenerateProperty, RandomDegenerateGraphs) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 80; ++round) {
    int k = 1 + static_cast<int>(round % 4);
    int n = 6 + static_cast<int>(rng() % 30);
    Graph g = random_degenerate_graph(n, k, rng());
    DegeneracyOrder sigma = degeneracy_ordering(g);
    ASSERT_LE(sigma.width, k);
    Colouring alpha = random_proper_colouring(g, k + 2, rng());

    DegenerateRecolourer r(g, k, alpha, sigma);
    auto pos = sigma.positions();
    for (std::size_t h = 0; h < r.size(); ++h) {
      if (r.colour_at(h) != k + 2) continue;
      std::size_t before = r.sequence().length();
      r.recolour_vertex(h);
      Sequence s = r.sequence();
      int top_moves = 0;
      for (std::size_t i = before; i < s.length(); ++i) {
        std::size_t p = static_cast<std::size_t>(pos[s.moves[i].vertex]);
        EXPECT_GE(p, h);
        top_moves += p == h ? 1 : 0;
      }
      EXPECT_EQ(top_moves, 1);
    }
    Sequence s = r.sequence();
    EXPECT_EQ(r.current().count(k + 2), 0);
    EXPECT_EQ(testsupport::replay_errors(g, s, r.current()), "");

    double log_bound = std::log(4.0) + 2.0 * std::log(static_cast<double>(n));
    for (Vertex v : g.vertices()) {
      if (g.degree(v) >= k + 2) log_bound += std::log(static_cast<double>(g.degree(v)));
    }
    if (s.length() > 0) EXPECT_LE(std::log(static_cast<double>(s.length())), log_bound + 1e-9);

    DegenerateStats stats;
    Sequence outer = reduce_one_colour_degenerate(g, k, alpha, sigma, &stats);
    EXPECT_EQ(stats.property_checks, stats.calls);
    EXPECT_EQ(outer.end().count(k + 2), 0);
    EXPECT_EQ(testsupport::replay_errors(g, outer, outer.end()), "");
  }
}

TEST(ReduceMad, PathBaseCase) {
  Graph p = path_graph(4);
  MadStats stats;
  Sequence s = reduce_one_colour_mad(p, 2, colours(4, {1, 2, 3, 4}), &stats);
  ASSERT_EQ(s.length(), 1u);
  EXPECT_EQ(s.moves[0].vertex, 4);
  EXPECT_EQ(s.end().count(4), 0);
  ASSERT_EQ(stats.levels.size(), 1u);
  EXPECT_TRUE(stats.levels[0].base_case);
}

TEST(ReduceMad, NothingToRemove) {
  Graph p = path_graph(4);
  EXPECT_EQ(reduce_one_colour_mad(p, 2, colours(4, {1, 2, 1, 2})).length(), 0u);
}

TEST(ReduceMad, Preconditions) {
  Graph p = path_graph(4);
  EXPECT_THROW(reduce_one_colour_mad(p, 1, colours(3, {1, 2, 3, 1})), PaletteTooSmall);
  EXPECT_THROW(reduce_one_colour_mad(p, 2, colours(5, {1, 2, 3, 5})), PaletteTooSmall);
}

// Long paths with k=2 and large grids with k=5 have too many low-degree
// vertices for the base case, so the peeling step runs.
TEST(ReduceMad, PeelingLevels) {
  struct Case {
    Graph g;
    int k;
  };
  std::vector<Case> cases{{path_graph(50), 2}, {grid_graph(15, 15), 5}, {cycle_graph(60), 2}};
  std::uint64_t seed = 3;
  for (const Case& c : cases) {
    for (int trial = 0; trial < 5; ++trial) {
      Colouring alpha = random_proper_colouring(c.g, c.k + 2, ++seed);
      MadStats stats;
      Sequence s = reduce_one_colour_mad(c.g, c.k, alpha, &stats);
      EXPECT_EQ(testsupport::replay_errors(c.g, s, s.end()), "");
      EXPECT_EQ(s.end().count(c.k + 2), 0);
      if (alpha.count(c.k + 2) == 0) continue;
      int inductive = 0;
      for (const MadLevel& l : stats.levels) {
        if (l.base_case) {
          EXPECT_LE(l.low_degree, l.threshold);
          continue;
        }
        ++inductive;
        EXPECT_GT(l.low_degree, (c.k + 1) * 2.0 * std::sqrt(l.n));
        EXPECT_GE(l.peeled, static_cast<int>(std::ceil(2.0 * std::sqrt(l.n))));
      }
      EXPECT_GT(inductive, 0);
    }
  }
}

TEST(ReduceMadProperty, ApollonianBaseInequalities) {
  const int k = 5;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = apollonian_graph(197, seed);
    Colouring alpha = random_proper_colouring(g, 7, seed * 31);
    MadStats stats;
    Sequence s = reduce_one_colour_mad(g, k, alpha, &stats);
    EXPECT_EQ(testsupport::replay_errors(g, s, s.end()), "");
    EXPECT_EQ(s.end().max_colour() <= 6, true);
    for (const MadLevel& l : stats.levels) {
      if (!l.base_case) continue;
      double root = std::sqrt(static_cast<double>(l.n));
      EXPECT_LT(l.high_degree, k * (k + 1) * 2.0 * root);
      EXPECT_LT(static_cast<double>(l.high_degree_sum), 4.0 * k * (k + 1) * (k + 1) * root);
    }
  }
}
