#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"

namespace recolour {

// Graph families used as test inputs. All are labelled 1..n and, except
// `complete` (n > 4) and `degenerate`, planar by construction.

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph grid_graph(int rows, int cols);
/// Hub 1 joined to a rim cycle 2..n+1.
Graph wheel_graph(int rim);
Graph complete_graph(int n);
/// Centre 1 with leaves 2..leaves+1.
Graph star_graph(int leaves);
Graph octahedron_graph();
Graph icosahedron_graph();
/// Planar triangulation: a triangle, then `steps` insertions of a vertex
/// into a uniformly chosen face, joined to its three corners.
Graph apollonian_graph(int steps, std::uint64_t seed);
/// Each vertex i joins up to k distinct random earlier vertices.
Graph random_degenerate_graph(int n, int k, std::uint64_t seed);

/// Dispatch by name: path n | cycle n | grid r c | wheel n | complete n |
/// star n | octahedron | icosahedron | apollonian steps | degenerate n k.
/// Throws UnknownFamily or UsageError for bad parameters.
Graph generate_family(const std::string& name, const std::vector<int>& params, std::uint64_t seed);

/// Proper k-colouring drawn along a degeneracy ordering, each vertex taking a
/// uniformly random colour not used by its earlier neighbours. Throws
/// PaletteTooSmall if k does not exceed the degeneracy.
Colouring random_proper_colouring(const Graph& g, int k, std::uint64_t seed);

}  // namespace recolour
