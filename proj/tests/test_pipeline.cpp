#include <gtest/gtest.h>

#include <random>

#include "recolour/generators.hpp"
#include "recolour/pipeline.hpp"
#include "support.hpp"

using namespace recolour;

namespace {

Colouring colours(int k, std::vector<Colour> cs) {
  Colouring c(k);
  for (std::size_t i = 0; i < cs.size(); ++i) c.set(static_cast<Vertex>(i + 1), cs[i]);
  return c;
}

VertexSet class_of(const Colouring& c, Colour col) {
  VertexSet out;
  for (const auto& [v, x] : c.assignment()) {
    if (x == col) out.push_back(v);
  }
  return out;
}

void expect_well_formed(const Graph& g, const PipelineResult& r, const Colouring& a, const Colouring& b) {
  EXPECT_EQ(testsupport::replay_errors(g, r.sequence, b), "");
  EXPECT_EQ(r.sequence.start, a);

  const PipelinePhases& ph = r.phases;
  std::vector<const Sequence*> chain{&ph.mad_alpha, &ph.planar65_alpha, &ph.pin_alpha, &ph.connect,
                                     &ph.pin_beta,  &ph.planar65_beta,  &ph.mad_beta};
  std::size_t sum = 0;
  Colouring at = a;
  for (const Sequence* s : chain) {
    EXPECT_EQ(s->start, at);
    EXPECT_EQ(testsupport::replay_errors(g, *s, s->end()), "");
    at = s->end();
    sum += s->length();
  }
  EXPECT_EQ(at, b);
  EXPECT_EQ(r.report.total, sum - r.report.coalesced);
  EXPECT_EQ(r.report.total, r.sequence.length());

  Colouring pinned = ph.pin_alpha.end();
  EXPECT_EQ(class_of(pinned, 7), r.partition.parts[0].part);
  EXPECT_EQ(class_of(pinned, 6), r.partition.parts[1].part);
  const VertexSet& rest = r.partition.parts[2].part;
  for (const Move& m : ph.connect.moves) {
    EXPECT_TRUE(std::binary_search(rest.begin(), rest.end(), m.vertex));
    EXPECT_LE(m.to, 5);
  }
}

}  // namespace

TEST(Pipeline, SingleVertex) {
  Graph g = Graph::with_vertices(1);
  Colouring a = colours(7, {3}), b = colours(7, {5});
  PipelineResult r = seven_colour_path(g, a, b);
  ASSERT_EQ(r.sequence.length(), 1u);
  EXPECT_EQ(r.sequence.moves[0], Move(1, 3, 5));
  expect_well_formed(g, r, a, b);
}

TEST(Pipeline, SingleEdgeSwap) {
  Graph g = path_graph(2);
  Colouring a = colours(7, {1, 2}), b = colours(7, {2, 1});
  PipelineResult r = seven_colour_path(g, a, b);
  expect_well_formed(g, r, a, b);
  EXPECT_EQ(testsupport::naive_distance(g, 7, a, b), 3);
  EXPECT_GE(r.sequence.length(), 3u);
}

TEST(Pipeline, GridReport) {
  Graph g = grid_graph(3, 3);
  Colouring a = random_proper_colouring(g, 7, 1), b = random_proper_colouring(g, 7, 2);
  PipelineResult r = seven_colour_path(g, a, b);
  expect_well_formed(g, r, a, b);
  EXPECT_EQ(r.report.n, 9);
  EXPECT_FALSE(r.report.partition_strategy.empty());
}

TEST(Pipeline, SerialMatchesParallel) {
  Graph g = apollonian_graph(60, 4);
  Colouring a = random_proper_colouring(g, 7, 8), b = random_proper_colouring(g, 7, 9);
  PipelineConfig serial;
  serial.parallel = false;
  PipelineResult x = seven_colour_path(g, a, b);
  PipelineResult y = seven_colour_path(g, a, b, serial);
  EXPECT_EQ(x.sequence.moves, y.sequence.moves);
}

TEST(Pipeline, WithoutCoalescing) {
  Graph g = wheel_graph(8);
  Colouring a = random_proper_colouring(g, 7, 3), b = random_proper_colouring(g, 7, 4);
  PipelineConfig raw;
  raw.coalesce = false;
  PipelineResult r = seven_colour_path(g, a, b, raw);
  EXPECT_EQ(r.report.coalesced, 0u);
  expect_well_formed(g, r, a, b);
}

TEST(PipelineProperty, RandomPlanarPairs) {
  std::mt19937_64 rng(23);
  std::vector<Graph> graphs{octahedron_graph(), icosahedron_graph(), cycle_graph(9), wheel_graph(12),
                            grid_graph(5, 6)};
  for (int steps : {5, 30, 90}) graphs.push_back(apollonian_graph(steps, rng()));
  for (const Graph& g : graphs) {
    for (int trial = 0; trial < 5; ++trial) {
      Colouring a = random_proper_colouring(g, 7, rng());
      Colouring b = random_proper_colouring(g, 7, rng());
      expect_well_formed(g, seven_colour_path(g, a, b), a, b);
    }
  }
}
