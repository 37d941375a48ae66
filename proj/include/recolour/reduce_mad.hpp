#pragma once

#include <cstddef>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"
#include "recolour/moves.hpp"
#include "recolour/reduce_degenerate.hpp"

namespace recolour {

/// Thresholds for the low-degree peeling recursion.
struct MadReduceConfig {
  int k = 5;

  /// (k+1) * 2 * sqrt(n). An instance is a base case when it has at most this
  /// many vertices of degree <= k.
  double low_degree_threshold(int n) const;
  /// ceil(2 * sqrt(n)): the guaranteed size of a peeled independent set.
  int peel_set_size(int n) const;
};

/// One recursion level of reduce_one_colour_mad.
struct MadLevel {
  int n = 0;
  int low_degree = 0;  // vertices of degree <= k
  double threshold = 0.0;
  bool base_case = false;
  int peeled = 0;  // |S| on inductive levels
  int peel_required = 0;
  // Base-case quantities over the whole instance.
  int high_degree = 0;  // s: vertices of degree >= k+2
  long long high_degree_sum = 0;
  double log_high_degree_product = 0.0;
};

struct MadStats {
  std::vector<MadLevel> levels;
  /// Number of individual inequality checks evaluated (all passed, since a
  /// failure throws).
  std::size_t asserts_checked = 0;
  std::size_t reactive_moves = 0;
  /// Largest number of moves on a single vertex in the returned sequence.
  int max_moves_per_vertex = 0;
  DegenerateStats base;
};

/// Removes colour k+2 from a (k+2)-colouring of a graph with maximum average
/// degree below k+1.
///
/// The degree bound is not checked directly. If it fails, the base-case
/// inequality checks (or the degeneracy bound) throw CertificateError.
/// Throws PaletteTooSmall when k < 2 or alpha's palette is not k+2.
Sequence reduce_one_colour_mad(const Graph& g, int k, const Colouring& alpha,
                               MadStats* stats = nullptr);

}  // namespace recolour
