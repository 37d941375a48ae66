#pragma once

// Independent reference implementations for the tests. Nothing here calls the
// library's algorithms; only the Graph/Colouring containers are shared.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"
#include "recolour/moves.hpp"

namespace testsupport {

using recolour::Colour;
using recolour::Colouring;
using recolour::Graph;
using recolour::Sequence;
using recolour::Vertex;

inline std::vector<std::vector<int>> adjacency_matrix(const Graph& g, std::vector<Vertex>& labels) {
  labels = g.vertices();
  std::map<Vertex, int> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> a(labels.size(), std::vector<int>(labels.size(), 0));
  for (auto [u, v] : g.edges()) {
    a[idx[u]][idx[v]] = 1;
    a[idx[v]][idx[u]] = 1;
  }
  return a;
}

// Degeneracy as the largest minimum degree over all peels (k-core style),
// recomputing degrees from the matrix each round.
inline int naive_degeneracy(const Graph& g) {
  std::vector<Vertex> labels;
  auto a = adjacency_matrix(g, labels);
  std::size_t n = labels.size();
  std::vector<bool> alive(n, true);
  int best = 0;
  for (std::size_t round = 0; round < n; ++round) {
    int min_deg = 1 << 30;
    std::size_t pick = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      int d = 0;
      for (std::size_t j = 0; j < n; ++j) d += alive[j] ? a[i][j] : 0;
      if (d < min_deg) {
        min_deg = d;
        pick = i;
      }
    }
    best = std::max(best, min_deg);
    alive[pick] = false;
  }
  return best;
}

// Width of an ordering: max back-degree.
inline int naive_width(const Graph& g, const std::vector<Vertex>& order) {
  int w = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int back = 0;
    for (std::size_t j = 0; j < i; ++j) back += g.has_edge(order[i], order[j]) ? 1 : 0;
    w = std::max(w, back);
  }
  return w;
}

// Smallest width over every permutation. Only for tiny graphs.
inline int brute_force_min_width(const Graph& g) {
  std::vector<Vertex> order = g.vertices();
  int best = 1 << 30;
  do {
    best = std::min(best, naive_width(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline bool naive_proper(const Graph& g, const Colouring& c) {
  for (auto [u, v] : g.edges()) {
    if (!c.contains(u) || !c.contains(v) || c.at(u) == c.at(v)) return false;
  }
  for (Vertex v : g.vertices()) {
    if (!c.contains(v) || c.at(v) < 1 || c.at(v) > c.palette()) return false;
  }
  return true;
}

inline bool naive_independent(const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

// Replays moves on a plain map, checking source colours, palette and
// properness after every step, then compares the end with `target`.
inline std::string replay_errors(const Graph& g, const Sequence& s, const Colouring& target) {
  if (!naive_proper(g, s.start)) return "start not proper";
  std::map<Vertex, Colour> cur = s.start.assignment();
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    const auto& m = s.moves[i];
    std::string at = "move " + std::to_string(i) + ": ";
    if (!cur.contains(m.vertex)) return at + "unknown vertex";
    if (cur[m.vertex] != m.from) return at + "stale source colour";
    if (m.to < 1 || m.to > s.palette() || m.to == m.from) return at + "bad target";
    for (Vertex w : g.neighbours(m.vertex)) {
      if (cur[w] == m.to) return at + "conflict with " + std::to_string(w);
    }
    cur[m.vertex] = m.to;
  }
  if (cur != target.assignment()) return "end differs from target";
  return {};
}

// Palette actually reached by a sequence (largest colour seen).
inline Colour max_colour_used(const Sequence& s) {
  Colour best = s.start.max_colour();
  for (const auto& m : s.moves) best = std::max(best, m.to);
  return best;
}

// BFS over proper k-colourings encoded as vectors; returns the geodesic
// length or nothing when unreachable.
inline std::optional<int> naive_distance(const Graph& g, int k, const Colouring& a, const Colouring& b) {
  std::vector<Vertex> labels;
  auto adj = adjacency_matrix(g, labels);
  std::size_t n = labels.size();
  auto encode = [&](const Colouring& c) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = c.at(labels[i]);
    return v;
  };
  std::vector<int> start = encode(a), goal = encode(b);
  std::map<std::vector<int>, int> dist{{start, 0}};
  std::queue<std::vector<int>> q;
  q.push(start);
  while (!q.empty()) {
    auto cur = q.front();
    q.pop();
    int d = dist[cur];
    if (cur == goal) return d;
    for (std::size_t i = 0; i < n; ++i) {
      for (int col = 1; col <= k; ++col) {
        if (col == cur[i]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) ok = !(adj[i][j] && cur[j] == col);
        if (!ok) continue;
        auto next = cur;
        next[i] = col;
        if (dist.emplace(next, d + 1).second) q.push(next);
      }
    }
  }
  return std::nullopt;
}

// Every proper k-colouring, lexicographic over the ascending labels.
inline std::vector<Colouring> all_proper_colourings(const Graph& g, int k) {
  std::vector<Vertex> labels = g.vertices();
  std::vector<Colouring> out;
  std::vector<int> cur(labels.size(), 1);
  while (true) {
    Colouring c(k);
    for (std::size_t i = 0; i < labels.size(); ++i) c.set(labels[i], cur[i]);
    if (naive_proper(g, c)) out.push_back(c);
    std::size_t i = labels.size();
    while (i > 0 && cur[i - 1] == k) cur[--i] = 1;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

// Proper colouring by rejection-free random first-fit over a shuffled order;
// gives up (returns nothing) if some vertex has no free colour.
inline std::optional<Colouring> random_colouring(const Graph& g, int k, std::mt19937_64& rng) {
  std::vector<Vertex> order = g.vertices();
  std::shuffle(order.begin(), order.end(), rng);
  Colouring c(k);
  for (Vertex v : order) {
    std::vector<Colour> free;
    for (Colour col = 1; col <= k; ++col) {
      bool used = false;
      for (Vertex w : g.neighbours(v)) used = used || (c.contains(w) && c.at(w) == col);
      if (!used) free.push_back(col);
    }
    if (free.empty()) return std::nullopt;
    c.set(v, free[rng() % free.size()]);
  }
  return c;
}

}  // namespace testsupport
