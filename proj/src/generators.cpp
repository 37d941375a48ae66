#include "recolour/generators.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "recolour/errors.hpp"
#include "recolour/ordering.hpp"

namespace recolour {

namespace {

void require_params(const std::string& name, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count) {
    throw UsageError("family '" + name + "' takes " + std::to_string(count) + " parameter(s)");
  }
  for (int p : params) {
    if (p < 0) throw UsageError("family '" + name + "' parameters must be non-negative");
  }
}

// Draws below `bound` straight from the engine so results do not depend on
// the standard library's distribution implementation.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

}  // namespace

Graph path_graph(int n) {
  Graph g = Graph::with_vertices(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw UsageError("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n, 1);
  return g;
}

Graph grid_graph(int rows, int cols) {
  Graph g = Graph::with_vertices(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c + 1; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  }
  return g;
}

Graph wheel_graph(int rim) {
  if (rim < 3) throw UsageError("a wheel needs a rim of at least 3 vertices");
  Graph g = Graph::with_vertices(rim + 1);
  for (int i = 0; i < rim; ++i) {
    g.add_edge(1, i + 2);
    g.add_edge(i + 2, (i + 1) % rim + 2);
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g = Graph::with_vertices(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph star_graph(int leaves) {
  Graph g = Graph::with_vertices(leaves + 1);
  for (Vertex v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
  return g;
}

Graph octahedron_graph() {
  // Opposite pairs (1,2), (3,4), (5,6) are the only non-edges.
  Graph g = Graph::with_vertices(6);
  for (Vertex u = 1; u <= 6; ++u) {
    for (Vertex v = u + 1; v <= 6; ++v) {
      bool opposite = (u % 2 == 1) && v == u + 1;
      if (!opposite) g.add_edge(u, v);
    }
  }
  return g;
}

Graph icosahedron_graph() {
  // Apex 1, upper ring 2..6, lower ring 7..11, apex 12.
  Graph g = Graph::with_vertices(12);
  for (int j = 0; j < 5; ++j) {
    Vertex up = 2 + j, up_next = 2 + (j + 1) % 5;
    Vertex low = 7 + j, low_next = 7 + (j + 1) % 5;
    g.add_edge(1, up);
    g.add_edge(up, up_next);
    g.add_edge(up, low);
    g.add_edge(up, low_next);
    g.add_edge(low, low_next);
    g.add_edge(12, low);
  }
  return g;
}

Graph apollonian_graph(int steps, std::uint64_t seed) {
  Graph g = complete_graph(3);
  std::vector<std::array<Vertex, 3>> faces{{1, 2, 3}, {1, 2, 3}};
  std::mt19937_64 rng(seed);
  for (int s = 0; s < steps; ++s) {
    Vertex v = 4 + s;
    std::size_t f = draw(rng, faces.size());
    auto [a, b, c] = faces[f];
    g.add_edge(v, a);
    g.add_edge(v, b);
    g.add_edge(v, c);
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }
  return g;
}

Graph random_degenerate_graph(int n, int k, std::uint64_t seed) {
  Graph g = Graph::with_vertices(n);
  std::mt19937_64 rng(seed);
  for (Vertex v = 2; v <= n; ++v) {
    std::vector<Vertex> earlier;
    for (Vertex u = 1; u < v; ++u) earlier.push_back(u);
    int picks = std::min<int>(k, static_cast<int>(earlier.size()));
    for (int i = 0; i < picks; ++i) {
      std::size_t j = i + draw(rng, earlier.size() - static_cast<std::size_t>(i));
      std::swap(earlier[static_cast<std::size_t>(i)], earlier[j]);
      g.add_edge(v, earlier[static_cast<std::size_t>(i)]);
    }
  }
  return g;
}

Graph generate_family(const std::string& name, const std::vector<int>& params, std::uint64_t seed) {
  if (name == "path") {
    require_params(name, params, 1);
    return path_graph(params[0]);
  }
  if (name == "cycle") {
    require_params(name, params, 1);
    return cycle_graph(params[0]);
  }
  if (name == "grid") {
    require_params(name, params, 2);
    return grid_graph(params[0], params[1]);
  }
  if (name == "wheel") {
    require_params(name, params, 1);
    return wheel_graph(params[0]);
  }
  if (name == "complete") {
    require_params(name, params, 1);
    return complete_graph(params[0]);
  }
  if (name == "star") {
    require_params(name, params, 1);
    return star_graph(params[0]);
  }
  if (name == "octahedron") {
    require_params(name, params, 0);
    return octahedron_graph();
  }
  if (name == "icosahedron") {
    require_params(name, params, 0);
    return icosahedron_graph();
  }
  if (name == "apollonian") {
    require_params(name, params, 1);
    return apollonian_graph(params[0], seed);
  }
  if (name == "degenerate") {
    require_params(name, params, 2);
    return random_degenerate_graph(params[0], params[1], seed);
  }
  throw UnknownFamily("unknown graph family '" + name + "'");
}

Colouring random_proper_colouring(const Graph& g, int k, std::uint64_t seed) {
  DegeneracyOrder ord = degeneracy_ordering(g);
  if (ord.width >= k) {
    throw PaletteTooSmall("palette " + std::to_string(k) + " does not exceed degeneracy " +
                          std::to_string(ord.width));
  }
  std::mt19937_64 rng(seed);
  Colouring c(k);
  for (Vertex v : ord.order) {
    std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
    for (Vertex w : g.neighbours(v)) {
      if (c.contains(w)) used[static_cast<std::size_t>(c.at(w))] = true;
    }
    std::vector<Colour> options;
    for (Colour col = 1; col <= k; ++col) {
      if (!used[static_cast<std::size_t>(col)]) options.push_back(col);
    }
    c.set(v, options[draw(rng, options.size())]);
  }
  return c;
}

}  // namespace recolour
