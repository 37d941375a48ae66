#include "recolour/connect.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "recolour/errors.hpp"
#include "recolour/ordering.hpp"

namespace recolour {

namespace {

void check_colouring(const Graph& g, const Colouring& c, int k, const char* name) {
  if (c.palette() != k) {
    throw PaletteTooSmall(std::string(name) + " has palette " + std::to_string(c.palette()) +
                          ", expected " + std::to_string(k));
  }
  if (!c.covers(g)) throw UsageError(std::string(name) + " does not cover the graph");
  if (!is_proper(g, c)) throw ImproperResult(std::string(name) + " is improper");
}

}  // namespace

Sequence connect_colourings(const Graph& g, int d, int k, const Colouring& alpha,
                            const Colouring& beta, const ConnectBudget& budget,
                            ConnectStats* stats) {
  if (d < 0 || k < 2 * d + 1) {
    throw PaletteTooSmall("need k >= 2d+1, got k = " + std::to_string(k) + ", d = " + std::to_string(d));
  }
  if (budget.factor < 1.0) throw UsageError("budget factor must be at least 1");
  check_colouring(g, alpha, k, "start colouring");
  check_colouring(g, beta, k, "target colouring");
  if (int w = degeneracy(g); w > d) {
    throw NotDegenerateEnough("graph has degeneracy " + std::to_string(w) + " > d = " + std::to_string(d));
  }

  ConnectStats local;
  local.soft_bound = budget.bound(g.n());

  // Peel order: repeatedly the last vertex of a fresh degeneracy ordering.
  std::vector<Vertex> peeled;
  {
    Graph rest = g;
    while (!rest.empty()) {
      Vertex v = degeneracy_ordering(rest).order.back();
      peeled.push_back(v);
      rest.remove_vertex(v);
    }
  }

  VertexSet present;
  Sequence previous{Colouring(k), {}};
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    const Vertex v = *it;
    present.insert(std::upper_bound(present.begin(), present.end(), v), v);
    Graph sub = induced_subgraph(g, present);
    Replay replay(sub, alpha.restricted_to(present));
    const auto nbrs = sub.neighbours(v);

    for (const Move& m : previous.moves) {
      bool adjacent = std::binary_search(nbrs.begin(), nbrs.end(), m.vertex);
      if (adjacent && m.to == replay.colour(v)) {
        std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
        used[static_cast<std::size_t>(replay.colour(v))] = true;
        used[static_cast<std::size_t>(m.to)] = true;
        for (Vertex w : nbrs) used[static_cast<std::size_t>(replay.colour(w))] = true;
        Colour shield = 1;
        while (shield <= k && used[static_cast<std::size_t>(shield)]) ++shield;
        if (shield > k) throw InternalError("no shield colour for vertex " + std::to_string(v));
        replay.recolour(v, shield);
        ++local.shield_moves;
      }
      replay.apply(m);
      if (replay.length() > budget.hard_cap) {
        local.length = replay.length();
        if (stats) *stats = local;
        throw HardCapExceeded("sequence passed the hard cap of " + std::to_string(budget.hard_cap) +
                              " moves after " + std::to_string(local.levels_completed) +
                              " vertices (" + std::to_string(local.shield_moves) + " shield moves)");
      }
    }
    if (replay.colour(v) != beta.at(v)) {
      replay.recolour(v, beta.at(v));
      ++local.final_moves;
    }
    previous = replay.sequence();
    ++local.levels_completed;
  }

  Sequence out{alpha, std::move(previous.moves)};
  local.length = out.moves.size();
  local.soft_exceeded = static_cast<double>(local.length) > local.soft_bound;
  std::map<Vertex, int> per_vertex;
  for (const Move& m : out.moves) {
    local.max_moves_per_vertex = std::max(local.max_moves_per_vertex, ++per_vertex[m.vertex]);
  }
  if (stats) *stats = local;
  return out;
}

}  // namespace recolour
