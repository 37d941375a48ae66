#pragma once

#include <cstddef>
#include <string>

#include "recolour/colouring.hpp"
#include "recolour/connect.hpp"
#include "recolour/graph.hpp"
#include "recolour/moves.hpp"
#include "recolour/partition.hpp"
#include "recolour/planar65.hpp"
#include "recolour/reduce_mad.hpp"

namespace recolour {

inline constexpr int kPipelinePalette = 7;

struct PipelineConfig {
  ThomassenConfig partition;
  ConnectBudget budget;
  /// Merge consecutive moves on the same vertex in the assembled sequence.
  bool coalesce = true;
  /// Run the alpha and beta reductions on separate threads.
  bool parallel = true;
};

struct PipelineReport {
  int n = 0;
  std::size_t mad_alpha = 0;
  std::size_t planar65_alpha = 0;
  std::size_t pin_alpha = 0;
  std::size_t connect = 0;
  std::size_t pin_beta = 0;
  std::size_t planar65_beta = 0;
  std::size_t mad_beta = 0;
  /// Moves removed by coalescing; total = sum of phases - coalesced.
  std::size_t coalesced = 0;
  std::size_t total = 0;
  /// log2(total) / sqrt(n); zero when either is zero.
  double fitted_exponent = 0.0;
  std::string partition_strategy;
  std::size_t mad_asserts = 0;
  std::size_t planar65_levels = 0;
  std::size_t kempe_swaps = 0;
  bool connect_soft_exceeded = false;
  double connect_soft_bound = 0.0;
};

/// Every phase of the assembled sequence, each starting where the previous one
/// ends. The beta-side phases are stored already reversed.
struct PipelinePhases {
  Sequence mad_alpha;
  Sequence planar65_alpha;
  Sequence pin_alpha;
  Sequence connect;  // lifted to the whole graph
  Sequence pin_beta;
  Sequence planar65_beta;
  Sequence mad_beta;
};

struct PipelineResult {
  Sequence sequence;
  PipelineReport report;
  PipelinePhases phases;
  VertexPartition partition;  // parts: I1, I2, A
  MadStats mad_alpha_stats, mad_beta_stats;
  Planar65Stats planar_alpha_stats, planar_beta_stats;
  ConnectStats connect_stats;
};

/// Recolouring sequence between two proper 7-colourings of a planar graph.
///
/// Each endpoint is reduced to a 5-colouring (colour 7, then colour 6); the
/// vertices of I1 and I2 are pinned to colours 7 and 6; the 2-degenerate rest
/// is connected with colours 1..5; the beta side is appended in reverse. The
/// result is verified against both endpoints before it is returned.
PipelineResult seven_colour_path(const Graph& g, const Colouring& alpha, const Colouring& beta,
                                 const PipelineConfig& cfg = {});

}  // namespace recolour
