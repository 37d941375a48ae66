#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace recolour {

using Vertex = int;
using Colour = int;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate free

/// Simple undirected graph over stable integer labels.
///
/// Labels survive deletion and identification: removing a vertex never
/// renames the others. Neighbour lists are kept sorted so every scan runs in
/// ascending label order.
class Graph {
 public:
  Graph() = default;

  /// Vertices 1..n, no edges.
  static Graph with_vertices(int n);

  void add_vertex(Vertex v);
  /// Adds edge uv, creating missing endpoints. Self-loops are rejected and
  /// parallel edges are ignored; returns false if the edge already existed.
  bool add_edge(Vertex u, Vertex v);
  void remove_vertex(Vertex v);
  /// Merges y into x in place (x keeps its label). x and y must be distinct
  /// and non-adjacent.
  void merge_into(Vertex x, Vertex y);

  bool has_vertex(Vertex v) const { return adj_.contains(v); }
  bool has_edge(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbours(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }
  bool empty() const { return adj_.empty(); }
  VertexSet vertices() const;
  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  const std::vector<Vertex>& row(Vertex v) const;

  std::map<Vertex, std::vector<Vertex>> adj_;
  int m_ = 0;
};

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);
Graph delete_vertices(const Graph& g, std::span<const Vertex> s);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Maximal independent subset of `s`, scanning `s` in ascending label order.
VertexSet greedy_maximal_independent_subset(const Graph& g, std::span<const Vertex> s);

bool is_independent(const Graph& g, std::span<const Vertex> s);

/// Normalises an arbitrary vertex list into a VertexSet.
VertexSet make_set(std::vector<Vertex> vs);

}  // namespace recolour
