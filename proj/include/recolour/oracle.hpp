#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"
#include "recolour/moves.hpp"

namespace recolour {

/// Instances with more than `max_states` colour assignments (k^n) are refused.
struct StateSpaceLimits {
  std::uint64_t max_states = 5'000'000;
};

/// Geodesic from alpha to beta in the graph of proper k-colourings, found by
/// breadth-first search expanding (vertex, colour) pairs in ascending order.
/// Returns nothing when beta is unreachable. Throws TooLarge past the limits.
std::optional<Sequence> shortest_sequence(const Graph& g, int k, const Colouring& alpha,
                                          const Colouring& beta, const StateSpaceLimits& limits = {});

struct ReconfigurationSummary {
  std::size_t proper_colourings = 0;
  std::size_t components = 0;
  bool connected = false;
  /// Maximum eccentricity; empty when the reconfiguration graph is
  /// disconnected (infinite diameter).
  std::optional<int> diameter;
};

/// Enumerates every proper k-colouring and runs a BFS from each.
ReconfigurationSummary component_and_diameter(const Graph& g, int k,
                                              const StateSpaceLimits& limits = {});

}  // namespace recolour
