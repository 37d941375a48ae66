#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>

#include "recolour/graph.hpp"

namespace recolour {

/// Total assignment of colours 1..k to vertices.
///
/// Properness is not part of the type; use is_proper.
class Colouring {
 public:
  explicit Colouring(int palette = 1);
  Colouring(int palette, std::map<Vertex, Colour> assignment);

  int palette() const { return palette_; }
  Colour at(Vertex v) const;
  bool contains(Vertex v) const { return assignment_.contains(v); }
  void set(Vertex v, Colour c);
  std::size_t size() const { return assignment_.size(); }
  const std::map<Vertex, Colour>& assignment() const { return assignment_; }

  /// Same assignment over a larger (or equal) palette.
  Colouring with_palette(int palette) const;
  Colouring restricted_to(std::span<const Vertex> vs) const;
  /// Largest colour used; 0 when empty.
  Colour max_colour() const;
  int count(Colour c) const;
  /// True iff the assignment covers exactly the vertices of g.
  bool covers(const Graph& g) const;

  bool operator==(const Colouring&) const = default;

 private:
  int palette_;
  std::map<Vertex, Colour> assignment_;
};

/// Returns the first monochromatic edge, if any.
std::optional<std::pair<Vertex, Vertex>> monochromatic_edge(const Graph& g, const Colouring& c);
bool is_proper(const Graph& g, const Colouring& c);

/// Smallest colour in [lo, hi] not used by v's neighbours (and not v's own
/// colour when `exclude_own` is set). Returns 0 if none exists.
Colour smallest_free_colour(const Graph& g, const Colouring& c, Vertex v, Colour lo, Colour hi,
                            bool exclude_own = true);

/// Component containing v of the subgraph induced by colours i and j.
VertexSet kempe_component(const Graph& g, const Colouring& c, Vertex v, Colour i, Colour j);

}  // namespace recolour
