#pragma once

#include <cstddef>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"
#include "recolour/moves.hpp"
#include "recolour/ordering.hpp"

namespace recolour {

/// Vertices of degree >= k+2, listed by position in the ordering.
struct HighDegreeProfile {
  std::vector<Vertex> u;
  std::vector<int> degrees;
};

/// Counters accumulated over recolour_vertex calls.
struct DegenerateStats {
  std::size_t calls = 0;
  std::size_t moves = 0;
  /// Calls for which the three per-call guarantees were checked and held.
  std::size_t property_checks = 0;
  /// Largest number of times a single vertex moved within one call.
  int max_moves_per_vertex = 0;
  /// Natural log of 4 * n^2 * prod(deg(u_i)), the length budget.
  double log_length_bound = 0.0;
};

/// Colour-elimination engine for a k-degenerate graph coloured with k+2
/// colours.
///
/// recolour_vertex(h) recolours the vertex at position h of the ordering once,
/// to a different colour, without touching any earlier vertex, and moves every
/// later vertex at most prod deg(u_j) times over the high-degree vertices u_j
/// at or after h. Each call checks these three guarantees and throws
/// CertificateError if one fails.
class DegenerateRecolourer {
 public:
  /// Throws PaletteTooSmall if k < 1 or alpha's palette is not k+2,
  /// WidthExceeded if sigma has back-degree above k, ImproperResult if alpha
  /// is improper.
  DegenerateRecolourer(const Graph& g, int k, const Colouring& alpha, const DegeneracyOrder& sigma);

  /// Runs the procedure on the vertex at position h (0-based); returns the
  /// number of moves appended.
  std::size_t recolour_vertex(std::size_t h);

  Colour colour_at(std::size_t position) const { return colour_[position]; }
  std::size_t size() const { return order_.size(); }
  Colouring current() const;
  Sequence sequence() const;
  const HighDegreeProfile& profile() const { return profile_; }
  const DegenerateStats& stats() const { return stats_; }
  /// Moves made per position by the most recent call.
  const std::vector<int>& last_call_counts() const { return counts_; }

 private:
  struct Frame {
    std::size_t h;
    int stage;
    Colour target;
    std::size_t next;
  };

  void move(std::size_t pos, Colour to);
  Colour free_colour(std::size_t pos) const;
  bool step(std::vector<Frame>& stack);

  int k_;
  int palette_;
  Colouring start_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> adj_;  // neighbour positions, ascending
  std::vector<Colour> colour_;
  std::vector<Move> moves_;
  HighDegreeProfile profile_;
  std::vector<double> log_budget_;  // suffix sums of log deg(u_j) by position
  std::vector<int> counts_;
  DegenerateStats stats_;
};

/// Removes colour k+2 from alpha by calling recolour_vertex on the earliest
/// vertex of that colour until none is left. Asserts the total length stays
/// within 4 * n^2 * prod deg(u_i).
Sequence reduce_one_colour_degenerate(const Graph& g, int k, const Colouring& alpha,
                                      const DegeneracyOrder& sigma,
                                      DegenerateStats* stats = nullptr);

}  // namespace recolour
