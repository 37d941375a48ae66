#include "recolour/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "recolour/errors.hpp"

namespace recolour {

namespace {

// Colourings of a fixed vertex order encoded as radix-k integers; digit i is
// the colour of vertex i minus one.
class StateSpace {
 public:
  StateSpace(const Graph& g, int k, const StateSpaceLimits& limits) : k_(k), labels_(g.vertices()) {
    if (k < 1) throw PaletteTooSmall("palette must be at least 1");
    std::map<Vertex, std::size_t> index;
    for (std::size_t i = 0; i < labels_.size(); ++i) index[labels_[i]] = i;
    adj_.resize(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      for (Vertex w : g.neighbours(labels_[i])) adj_[i].push_back(index[w]);
    }
    power_.push_back(1);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (power_.back() > limits.max_states / static_cast<std::uint64_t>(k)) {
        throw TooLarge("state space " + std::to_string(k) + "^" + std::to_string(labels_.size()) +
                       " exceeds the cap of " + std::to_string(limits.max_states));
      }
      power_.push_back(power_.back() * static_cast<std::uint64_t>(k));
    }
  }

  std::uint64_t size() const { return power_.back(); }
  std::size_t n() const { return labels_.size(); }

  Colour colour(std::uint64_t state, std::size_t i) const {
    return static_cast<Colour>((state / power_[i]) % static_cast<std::uint64_t>(k_)) + 1;
  }

  std::uint64_t encode(const Colouring& c) const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      Colour col = c.at(labels_[i]);
      if (col > k_) throw UsageError("colour " + std::to_string(col) + " exceeds palette");
      s += static_cast<std::uint64_t>(col - 1) * power_[i];
    }
    return s;
  }

  bool proper(std::uint64_t state) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      for (std::size_t j : adj_[i]) {
        if (j > i && colour(state, i) == colour(state, j)) return false;
      }
    }
    return true;
  }

  // Calls f(next, vertex index, new colour) for every valid single-vertex
  // recolouring, in ascending (vertex, colour) order.
  template <typename F>
  void for_each_neighbour(std::uint64_t state, F&& f) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      Colour own = colour(state, i);
      for (Colour c = 1; c <= k_; ++c) {
        if (c == own) continue;
        bool clash = std::any_of(adj_[i].begin(), adj_[i].end(),
                                 [&](std::size_t j) { return colour(state, j) == c; });
        if (clash) continue;
        std::uint64_t next = state - static_cast<std::uint64_t>(own - 1) * power_[i] +
                             static_cast<std::uint64_t>(c - 1) * power_[i];
        f(next, i, c);
      }
    }
  }

  Vertex label(std::size_t i) const { return labels_[i]; }

 private:
  int k_;
  VertexSet labels_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::uint64_t> power_;
};

constexpr std::int64_t kUnseen = -1;

}  // namespace

std::optional<Sequence> shortest_sequence(const Graph& g, int k, const Colouring& alpha,
                                          const Colouring& beta, const StateSpaceLimits& limits) {
  StateSpace space(g, k, limits);
  if (!alpha.covers(g) || !beta.covers(g)) throw UsageError("colourings must cover the graph");
  const std::uint64_t source = space.encode(alpha);
  const std::uint64_t target = space.encode(beta);
  if (!space.proper(source) || !space.proper(target)) throw UsageError("endpoints must be proper");

  // parent[s] = predecessor state, or kUnseen.
  std::vector<std::int64_t> parent(space.size(), kUnseen);
  parent[source] = static_cast<std::int64_t>(source);
  std::deque<std::uint64_t> queue{source};
  while (!queue.empty() && parent[target] == kUnseen) {
    std::uint64_t s = queue.front();
    queue.pop_front();
    space.for_each_neighbour(s, [&](std::uint64_t next, std::size_t, Colour) {
      if (parent[next] != kUnseen) return;
      parent[next] = static_cast<std::int64_t>(s);
      queue.push_back(next);
    });
  }
  if (parent[target] == kUnseen) return std::nullopt;

  std::vector<std::uint64_t> path{target};
  while (path.back() != source) path.push_back(static_cast<std::uint64_t>(parent[path.back()]));
  std::reverse(path.begin(), path.end());

  Sequence out{alpha.with_palette(k), {}};
  for (std::size_t step = 1; step < path.size(); ++step) {
    for (std::size_t i = 0; i < space.n(); ++i) {
      Colour a = space.colour(path[step - 1], i);
      Colour b = space.colour(path[step], i);
      if (a != b) {
        out.moves.emplace_back(space.label(i), a, b);
        break;
      }
    }
  }
  return out;
}

ReconfigurationSummary component_and_diameter(const Graph& g, int k, const StateSpaceLimits& limits) {
  StateSpace space(g, k, limits);
  std::vector<std::uint64_t> proper;
  for (std::uint64_t s = 0; s < space.size(); ++s) {
    if (space.proper(s)) proper.push_back(s);
  }

  ReconfigurationSummary out;
  out.proper_colourings = proper.size();
  std::vector<int> component(space.size(), -1);
  std::vector<int> dist(space.size(), -1);
  int diameter = 0;
  for (std::uint64_t source : proper) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[source] = 0;
    bool fresh = component[source] < 0;
    if (fresh) component[source] = static_cast<int>(out.components++);
    std::deque<std::uint64_t> queue{source};
    while (!queue.empty()) {
      std::uint64_t s = queue.front();
      queue.pop_front();
      diameter = std::max(diameter, dist[s]);
      space.for_each_neighbour(s, [&](std::uint64_t next, std::size_t, Colour) {
        if (dist[next] >= 0) return;
        dist[next] = dist[s] + 1;
        if (fresh) component[next] = component[source];
        queue.push_back(next);
      });
    }
  }
  out.connected = out.components <= 1;
  if (out.connected) out.diameter = diameter;
  return out;
}

}  // namespace recolour
