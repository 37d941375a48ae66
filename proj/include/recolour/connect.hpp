#pragma once

#include <cstddef>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"
#include "recolour/moves.hpp"

namespace recolour {

/// Soft quadratic length budget plus an absolute abort limit.
struct ConnectBudget {
  double factor = 50.0;
  std::size_t hard_cap = 50'000'000;

  double bound(int n) const { return factor * static_cast<double>(n) * static_cast<double>(n); }
};

struct ConnectStats {
  std::size_t length = 0;
  std::size_t shield_moves = 0;
  std::size_t final_moves = 0;  // moves placing a peeled vertex on its target colour
  int max_moves_per_vertex = 0;
  double soft_bound = 0.0;
  bool soft_exceeded = false;
  /// Vertices re-inserted before the run finished (or aborted).
  int levels_completed = 0;
};

/// Sequence from alpha to beta for a d-degenerate graph and k >= 2d+1.
///
/// Peel-and-shield: the last vertex v of a degeneracy ordering has at most d
/// neighbours. Connect the colourings of g - v recursively, then replay on g;
/// before a neighbour of v takes v's colour, v moves to the smallest colour
/// not on v, its neighbours or the incoming colour. Finally v moves to
/// beta(v).
///
/// Throws PaletteTooSmall (k < 2d+1 or palettes differ from k),
/// NotDegenerateEnough, or HardCapExceeded (stats hold the partial counts).
/// Exceeding the soft bound only sets stats->soft_exceeded.
Sequence connect_colourings(const Graph& g, int d, int k, const Colouring& alpha,
                            const Colouring& beta, const ConnectBudget& budget = {},
                            ConnectStats* stats = nullptr);

}  // namespace recolour
