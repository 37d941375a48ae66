#include "recolour/colouring.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "recolour/errors.hpp"

namespace recolour {

Colouring::Colouring(int palette) : palette_(palette) {
  if (palette < 1) throw PaletteTooSmall("palette must be at least 1");
}

Colouring::Colouring(int palette, std::map<Vertex, Colour> assignment) : Colouring(palette) {
  for (const auto& [v, c] : assignment) set(v, c);
}

Colour Colouring::at(Vertex v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) throw UnknownVertex("vertex " + std::to_string(v) + " is uncoloured");
  return it->second;
}

void Colouring::set(Vertex v, Colour c) {
  if (c < 1 || c > palette_) {
    throw UsageError("colour " + std::to_string(c) + " of vertex " + std::to_string(v) +
                     " outside 1.." + std::to_string(palette_));
  }
  assignment_[v] = c;
}

Colouring Colouring::with_palette(int palette) const {
  if (palette < max_colour()) throw PaletteTooSmall("palette smaller than colours in use");
  Colouring out(palette);
  out.assignment_ = assignment_;
  return out;
}

Colouring Colouring::restricted_to(std::span<const Vertex> vs) const {
  Colouring out(palette_);
  for (Vertex v : vs) out.assignment_[v] = at(v);
  return out;
}

Colour Colouring::max_colour() const {
  Colour best = 0;
  for (const auto& [_, c] : assignment_) best = std::max(best, c);
  return best;
}

int Colouring::count(Colour c) const {
  return static_cast<int>(std::count_if(assignment_.begin(), assignment_.end(),
                                        [c](const auto& kv) { return kv.second == c; }));
}

bool Colouring::covers(const Graph& g) const {
  if (assignment_.size() != static_cast<std::size_t>(g.n())) return false;
  return std::all_of(assignment_.begin(), assignment_.end(),
                     [&](const auto& kv) { return g.has_vertex(kv.first); });
}

std::optional<std::pair<Vertex, Vertex>> monochromatic_edge(const Graph& g, const Colouring& c) {
  for (const auto& [u, v] : g.edges()) {
    if (c.at(u) == c.at(v)) return std::make_pair(u, v);
  }
  return std::nullopt;
}

bool is_proper(const Graph& g, const Colouring& c) { return !monochromatic_edge(g, c); }

Colour smallest_free_colour(const Graph& g, const Colouring& c, Vertex v, Colour lo, Colour hi,
                            bool exclude_own) {
  if (hi < lo) return 0;
  std::vector<bool> used(static_cast<std::size_t>(hi - lo + 1), false);
  auto mark = [&](Colour col) {
    if (col >= lo && col <= hi) used[static_cast<std::size_t>(col - lo)] = true;
  };
  if (exclude_own) mark(c.at(v));
  for (Vertex w : g.neighbours(v)) mark(c.at(w));
  for (Colour col = lo; col <= hi; ++col) {
    if (!used[static_cast<std::size_t>(col - lo)]) return col;
  }
  return 0;
}

VertexSet kempe_component(const Graph& g, const Colouring& c, Vertex v, Colour i, Colour j) {
  Colour seed = c.at(v);
  if (seed != i && seed != j) {
    throw BadSeedColour("vertex " + std::to_string(v) + " has colour " + std::to_string(seed) +
                        ", not " + std::to_string(i) + " or " + std::to_string(j));
  }
  VertexSet comp{v};
  std::vector<Vertex> stack{v};
  std::map<Vertex, bool> seen{{v, true}};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbours(u)) {
      Colour cw = c.at(w);
      if ((cw == i || cw == j) && !seen[w]) {
        seen[w] = true;
        comp.push_back(w);
        stack.push_back(w);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

}  // namespace recolour
