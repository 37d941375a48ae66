#pragma once

#include <map>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"

namespace recolour {

/// Vertex ordering v_1..v_n together with its width: the largest number of
/// neighbours any v_i has among v_1..v_{i-1}.
struct DegeneracyOrder {
  std::vector<Vertex> order;
  int width = 0;

  /// Position of each vertex in `order`.
  std::map<Vertex, int> positions() const;
};

/// Minimum-width ordering: repeatedly peel a minimum-degree vertex (smallest
/// label on ties) and reverse the peel sequence. The width equals the
/// degeneracy of g.
DegeneracyOrder degeneracy_ordering(const Graph& g);

/// Width of an arbitrary ordering of g's vertices. Throws UsageError if the
/// order is not a permutation of V(g).
int ordering_width(const Graph& g, const std::vector<Vertex>& order);

int degeneracy(const Graph& g);

/// First-fit colouring along `ord`; palette is ord.width + 1.
Colouring greedy_colouring(const Graph& g, const DegeneracyOrder& ord);

/// Union-find over vertex labels. The representative of a class is its
/// smallest label.
class MergeMap {
 public:
  MergeMap() = default;
  explicit MergeMap(const std::vector<Vertex>& vertices);

  void add(Vertex v);
  Vertex find(Vertex v) const;
  /// Joins the classes of x and y; returns the new representative.
  Vertex unite(Vertex x, Vertex y);
  bool trivial() const;
  /// Representative -> sorted members, for every class.
  std::map<Vertex, std::vector<Vertex>> classes() const;

 private:
  mutable std::map<Vertex, Vertex> parent_;
};

struct Identification {
  Graph graph;
  MergeMap merge;
};

/// Merges non-adjacent x and y into min(x, y). The merged vertex is adjacent
/// to the union of both neighbourhoods. Throws AdjacentPairError if xy is an
/// edge.
Identification identify_vertices(const Graph& g, Vertex x, Vertex y);

}  // namespace recolour
