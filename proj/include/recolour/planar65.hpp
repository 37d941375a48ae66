#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"
#include "recolour/moves.hpp"
#include "recolour/ordering.hpp"

namespace recolour {

/// Palette used while reducing a 6-colouring to a 5-colouring: colour 7 is a
/// transient buffer.
inline constexpr int kPlanarPalette = 7;

struct SpecialSetReport {
  int h = 0;
  VertexSet low_degree;  // S: vertices of degree <= 6
  VertexSet chosen;      // I
  double low_degree_ratio = 0.0;
  double chosen_ratio = 0.0;
};

/// I = greedy maximal independent subset of the vertices of degree <= 6.
/// Throws CertificateError unless |S| >= h/7 and |I| >= h/49, which holds for
/// every planar graph.
std::pair<VertexSet, SpecialSetReport> special_independent_set(const Graph& g);

struct Contraction {
  Graph graph;
  Colouring colouring;
  MergeMap merge;
  VertexSet deleted;
  std::vector<std::pair<Vertex, Vertex>> identified;
};

/// Deletes every vertex of I, first identifying a same-coloured pair of
/// neighbours for those that still have degree 6. Vertices are processed in
/// ascending order against the evolving graph; merged classes keep their
/// colour, so the inherited colouring stays proper.
Contraction contract_special_set(const Graph& g, const Colouring& gamma, const VertexSet& independent);

/// Lifts a sequence on the contracted graph back to g. A move on a class
/// representative becomes one move per class member (ascending). Before a
/// member takes a colour held by an adjacent vertex u of I, u is moved to the
/// smallest colour in 1..7 missing from u and its neighbours.
Sequence replay_on_expansion(const Graph& g, const Sequence& contracted, const MergeMap& merge,
                             const VertexSet& independent, const Colouring& current);

struct Planar65Stats {
  std::vector<SpecialSetReport> levels;
  std::size_t reactive_moves = 0;
  std::size_t buffer_cleanups = 0;  // colour-7 vertices of I recoloured
  std::size_t direct_fixes = 0;     // colour-6 vertices with a free colour
  std::size_t kempe_fixes = 0;
  std::size_t component_swaps = 0;
  std::size_t swap_boundary_checks = 0;  // colour-7 class verified empty
};

/// Recolours v from colour 6 to a colour in 1..5. Uses a single move when one
/// of 1..5 is missing around v; otherwise finds colours i < j such that no
/// (i, j)-component holds both an i- and a j-coloured neighbour of v, swaps i
/// and j (through colour 7) on each component holding an i-coloured neighbour,
/// and moves v to i. Throws KempeExhausted if no pair works.
void kempe_fix_vertex(Replay& replay, Vertex v, Planar65Stats* stats = nullptr);
Sequence kempe_fix_vertex(const Graph& g, const Colouring& c, Vertex v);

/// Recolours a 6-colouring of a planar graph to a 5-colouring using seven
/// colours. The returned sequence has palette 7.
Sequence reduce_planar_6_to_5(const Graph& g, const Colouring& gamma, Planar65Stats* stats = nullptr);

}  // namespace recolour
