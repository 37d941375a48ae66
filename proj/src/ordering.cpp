#include "recolour/ordering.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "recolour/errors.hpp"

namespace recolour {

std::map<Vertex, int> DegeneracyOrder::positions() const {
  std::map<Vertex, int> pos;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[static_cast<std::size_t>(i)]] = i;
  return pos;
}

DegeneracyOrder degeneracy_ordering(const Graph& g) {
  std::map<Vertex, int> deg;
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v : g.vertices()) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  DegeneracyOrder out;
  out.order.reserve(static_cast<std::size_t>(g.n()));
  std::map<Vertex, bool> removed;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    out.width = std::max(out.width, d);
    out.order.push_back(v);
    for (Vertex w : g.neighbours(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

int ordering_width(const Graph& g, const std::vector<Vertex>& order) {
  if (make_set(order) != g.vertices() || order.size() != static_cast<std::size_t>(g.n())) {
    throw UsageError("ordering is not a permutation of the vertex set");
  }
  std::map<Vertex, int> pos;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[static_cast<std::size_t>(i)]] = i;
  int width = 0;
  for (Vertex v : order) {
    int back = 0;
    for (Vertex w : g.neighbours(v)) back += pos[w] < pos[v] ? 1 : 0;
    width = std::max(width, back);
  }
  return width;
}

int degeneracy(const Graph& g) { return degeneracy_ordering(g).width; }

Colouring greedy_colouring(const Graph& g, const DegeneracyOrder& ord) {
  Colouring out(ord.width + 1);
  for (Vertex v : ord.order) {
    std::vector<bool> used(static_cast<std::size_t>(ord.width) + 2, false);
    for (Vertex w : g.neighbours(v)) {
      if (!out.contains(w)) continue;
      Colour c = out.at(w);
      if (c < static_cast<Colour>(used.size())) used[static_cast<std::size_t>(c)] = true;
    }
    Colour c = 1;
    while (used[static_cast<std::size_t>(c)]) ++c;
    if (c > ord.width + 1) {
      throw WidthExceeded("ordering has back-degree above its recorded width " +
                          std::to_string(ord.width));
    }
    out.set(v, c);
  }
  return out;
}

MergeMap::MergeMap(const std::vector<Vertex>& vertices) {
  for (Vertex v : vertices) parent_[v] = v;
}

void MergeMap::add(Vertex v) { parent_.try_emplace(v, v); }

Vertex MergeMap::find(Vertex v) const {
  auto it = parent_.find(v);
  if (it == parent_.end()) throw UnknownVertex("vertex " + std::to_string(v) + " not in merge map");
  Vertex root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    Vertex next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

Vertex MergeMap::unite(Vertex x, Vertex y) {
  Vertex rx = find(x);
  Vertex ry = find(y);
  if (rx == ry) return rx;
  Vertex rep = std::min(rx, ry);
  parent_[std::max(rx, ry)] = rep;
  return rep;
}

bool MergeMap::trivial() const {
  return std::all_of(parent_.begin(), parent_.end(),
                     [](const auto& kv) { return kv.first == kv.second; });
}

std::map<Vertex, std::vector<Vertex>> MergeMap::classes() const {
  std::map<Vertex, std::vector<Vertex>> out;
  for (const auto& [v, _] : parent_) out[find(v)].push_back(v);
  return out;
}

Identification identify_vertices(const Graph& g, Vertex x, Vertex y) {
  if (!g.has_vertex(x)) throw UnknownVertex("unknown vertex " + std::to_string(x));
  if (!g.has_vertex(y)) throw UnknownVertex("unknown vertex " + std::to_string(y));
  Identification out{g, MergeMap(g.vertices())};
  Vertex keep = std::min(x, y);
  out.graph.merge_into(keep, std::max(x, y));
  out.merge.unite(x, y);
  return out;
}

}  // namespace recolour
