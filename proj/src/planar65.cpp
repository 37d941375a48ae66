#include "recolour/planar65.hpp"

#include <algorithm>
#include <string>

#include "recolour/errors.hpp"

namespace recolour {

namespace {

constexpr Colour kHeld = 6;    // colour being eliminated
constexpr Colour kBuffer = 7;  // transient colour

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

void check_buffer_empty(const Replay& replay, Planar65Stats* stats) {
  if (replay.current().count(kBuffer) != 0) {
    throw CertificateError("colour 7 in use at a swap boundary");
  }
  if (stats) ++stats->swap_boundary_checks;
}

// Colours i and j are exchanged on `component` without ever leaving colour 7
// at rest: j -> 7, then i -> j, then the buffered vertices -> i.
void swap_component(Replay& replay, const VertexSet& component, Colour i, Colour j,
                    Planar65Stats* stats) {
  check_buffer_empty(replay, stats);
  VertexSet buffered;
  for (Vertex x : component) {
    if (replay.colour(x) == j) {
      replay.recolour(x, kBuffer);
      buffered.push_back(x);
    }
  }
  for (Vertex x : component) {
    if (replay.colour(x) == i) replay.recolour(x, j);
  }
  for (Vertex x : buffered) replay.recolour(x, i);
  check_buffer_empty(replay, stats);
  if (stats) ++stats->component_swaps;
}

void expand_into(Replay& replay, const Sequence& contracted, const MergeMap& merge,
                 const VertexSet& independent, Planar65Stats* stats) {
  const Graph& g = replay.graph();
  auto classes = merge.classes();
  for (const Move& m : contracted.moves) {
    auto it = classes.find(m.vertex);
    if (it == classes.end()) {
      throw InternalError("move on vertex " + std::to_string(m.vertex) + " outside the merge map");
    }
    for (Vertex x : it->second) {
      if (replay.colour(x) != m.from) {
        throw InternalError("merged class of " + std::to_string(m.vertex) + " is not monochromatic");
      }
      for (Vertex u : g.neighbours(x)) {
        if (!contains(independent, u) || replay.colour(u) != m.to) continue;
        Colour c = smallest_free_colour(g, replay.current(), u, 1, kPlanarPalette);
        if (c == 0) {
          throw NoFreeColour("vertex " + std::to_string(u) + " sees all seven colours");
        }
        replay.recolour(u, c);
        if (stats) ++stats->reactive_moves;
      }
      replay.apply(Move(x, m.from, m.to));
    }
  }
}

Sequence reduce_level(const Graph& g, const Colouring& gamma, Planar65Stats* stats) {
  if (g.empty() || gamma.max_colour() <= 5) return Sequence{gamma, {}};

  auto [independent, report] = special_independent_set(g);
  if (stats) stats->levels.push_back(report);
  Contraction con = contract_special_set(g, gamma, independent);
  Sequence inner = reduce_level(con.graph, con.colouring, stats);

  Replay replay(g, gamma);
  expand_into(replay, inner, con.merge, independent, stats);

  for (Vertex u : independent) {
    if (replay.colour(u) != kBuffer) continue;
    Colour c = smallest_free_colour(g, replay.current(), u, 1, kHeld);
    if (c == 0) throw NoFreeColour("vertex " + std::to_string(u) + " has no colour in 1..6");
    replay.recolour(u, c);
    if (stats) ++stats->buffer_cleanups;
  }

  std::size_t rounds = 0;
  for (;;) {
    auto held = std::find_if(independent.begin(), independent.end(),
                             [&](Vertex u) { return replay.colour(u) == kHeld; });
    if (held == independent.end()) break;
    if (rounds++ >= independent.size()) {
      throw CertificateError("colour-6 fixes exceeded |I| rounds");
    }
    kempe_fix_vertex(replay, *held, stats);
  }

  if (replay.current().max_colour() > 5) {
    throw InternalError("level finished with a colour above 5");
  }
  return replay.sequence();
}

}  // namespace

std::pair<VertexSet, SpecialSetReport> special_independent_set(const Graph& g) {
  if (g.empty()) throw UsageError("special independent set of an empty graph");
  SpecialSetReport report;
  report.h = g.n();
  for (Vertex v : g.vertices()) {
    if (g.degree(v) <= 6) report.low_degree.push_back(v);
  }
  report.chosen = greedy_maximal_independent_subset(g, report.low_degree);
  report.low_degree_ratio = static_cast<double>(report.low_degree.size()) / report.h;
  report.chosen_ratio = static_cast<double>(report.chosen.size()) / report.h;
  if (7 * static_cast<long long>(report.low_degree.size()) < report.h) {
    throw CertificateError("fewer than h/7 vertices of degree <= 6; graph is not planar");
  }
  if (49 * static_cast<long long>(report.chosen.size()) < report.h) {
    throw CertificateError("special independent set smaller than h/49; graph is not planar");
  }
  return {report.chosen, report};
}

Contraction contract_special_set(const Graph& g, const Colouring& gamma, const VertexSet& independent) {
  if (gamma.max_colour() > kHeld) throw UsageError("colouring uses a colour above 6");
  if (!is_independent(g, independent)) throw UsageError("vertex set is not independent");

  Contraction out{g, gamma, MergeMap{}, independent, {}};
  for (Vertex v : g.vertices()) {
    if (!contains(independent, v)) out.merge.add(v);
  }
  for (Vertex v : independent) {
    int d = out.graph.degree(v);
    if (d > 6) throw UsageError("vertex " + std::to_string(v) + " has degree above 6");
    if (d == 6) {
      auto nbrs = out.graph.neighbours(v);
      std::optional<std::pair<Vertex, Vertex>> pair;
      for (std::size_t a = 0; a < nbrs.size() && !pair; ++a) {
        for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
          if (out.colouring.at(nbrs[a]) == out.colouring.at(nbrs[b])) {
            pair = std::make_pair(nbrs[a], nbrs[b]);
            break;
          }
        }
      }
      if (!pair) {
        throw InternalError("degree-6 vertex " + std::to_string(v) +
                            " has no same-coloured neighbour pair");
      }
      auto [x, y] = *pair;  // x < y: neighbour lists are sorted
      out.graph.merge_into(x, y);
      out.merge.unite(x, y);
      out.identified.emplace_back(x, y);
    }
    out.graph.remove_vertex(v);
  }
  out.colouring = gamma.restricted_to(out.graph.vertices());
  return out;
}

Sequence replay_on_expansion(const Graph& g, const Sequence& contracted, const MergeMap& merge,
                             const VertexSet& independent, const Colouring& current) {
  Replay replay(g, current);
  expand_into(replay, contracted, merge, independent, nullptr);
  return replay.sequence();
}

void kempe_fix_vertex(Replay& replay, Vertex v, Planar65Stats* stats) {
  const Graph& g = replay.graph();
  if (replay.colour(v) != kHeld) throw UsageError("vertex " + std::to_string(v) + " is not coloured 6");
  if (replay.current().count(kBuffer) != 0) throw UsageError("colour 7 must be unused");
  const int held_before = replay.current().count(kHeld);

  if (Colour c = smallest_free_colour(g, replay.current(), v, 1, 5)) {
    replay.recolour(v, c);
    if (stats) ++stats->direct_fixes;
    return;
  }

  auto nbrs = g.neighbours(v);
  for (Colour i = 1; i <= 5; ++i) {
    for (Colour j = i + 1; j <= 5; ++j) {
      std::vector<VertexSet> components;
      bool blocked = false;
      for (Vertex w : nbrs) {
        if (replay.colour(w) != i) continue;
        if (std::any_of(components.begin(), components.end(),
                        [&](const VertexSet& comp) { return contains(comp, w); })) {
          continue;
        }
        VertexSet comp = kempe_component(g, replay.current(), w, i, j);
        blocked = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex x) {
          return replay.colour(x) == j && contains(comp, x);
        });
        if (blocked) break;
        components.push_back(std::move(comp));
      }
      if (blocked) continue;
      for (const VertexSet& comp : components) swap_component(replay, comp, i, j, stats);
      replay.recolour(v, i);
      if (replay.current().count(kHeld) >= held_before) {
        throw InternalError("Kempe fix did not reduce the colour-6 class");
      }
      if (stats) ++stats->kempe_fixes;
      return;
    }
  }
  throw KempeExhausted("no Kempe swap frees a colour at vertex " + std::to_string(v) +
                       "; graph is not planar");
}

Sequence kempe_fix_vertex(const Graph& g, const Colouring& c, Vertex v) {
  Replay replay(g, c.with_palette(std::max(c.palette(), kPlanarPalette)));
  kempe_fix_vertex(replay, v, nullptr);
  return replay.sequence();
}

Sequence reduce_planar_6_to_5(const Graph& g, const Colouring& gamma, Planar65Stats* stats) {
  if (gamma.palette() > kPlanarPalette) throw UsageError("palette above 7");
  if (gamma.max_colour() > kHeld) throw UsageError("colouring uses a colour above 6");
  if (!gamma.covers(g)) throw UsageError("colouring does not cover the graph");
  if (!is_proper(g, gamma)) throw ImproperResult("start colouring is improper");
  return reduce_level(g, gamma.with_palette(kPlanarPalette), stats);
}

}  // namespace recolour
