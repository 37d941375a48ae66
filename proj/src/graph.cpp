#include "recolour/graph.hpp"

#include <algorithm>
#include <string>

#include "recolour/errors.hpp"

namespace recolour {

namespace {

void insert_sorted(std::vector<Vertex>& row, Vertex v) {
  row.insert(std::lower_bound(row.begin(), row.end(), v), v);
}

void erase_sorted(std::vector<Vertex>& row, Vertex v) {
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it != row.end() && *it == v) row.erase(it);
}

}  // namespace

Graph Graph::with_vertices(int n) {
  Graph g;
  for (Vertex v = 1; v <= n; ++v) g.add_vertex(v);
  return g;
}

void Graph::add_vertex(Vertex v) { adj_.try_emplace(v); }

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
  auto& ru = adj_[u];
  auto& rv = adj_[v];
  if (std::binary_search(ru.begin(), ru.end(), v)) return false;
  insert_sorted(ru, v);
  insert_sorted(rv, u);
  ++m_;
  return true;
}

void Graph::remove_vertex(Vertex v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw UnknownVertex("unknown vertex " + std::to_string(v));
  for (Vertex w : it->second) erase_sorted(adj_[w], v);
  m_ -= static_cast<int>(it->second.size());
  adj_.erase(it);
}

void Graph::merge_into(Vertex x, Vertex y) {
  if (x == y) throw UsageError("cannot merge a vertex with itself");
  if (has_edge(x, y)) {
    throw AdjacentPairError("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                            " are adjacent");
  }
  std::vector<Vertex> moved(row(y).begin(), row(y).end());
  remove_vertex(y);
  for (Vertex w : moved) add_edge(x, w);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), v);
}

const std::vector<Vertex>& Graph::row(Vertex v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw UnknownVertex("unknown vertex " + std::to_string(v));
  return it->second;
}

std::span<const Vertex> Graph::neighbours(Vertex v) const { return row(v); }

VertexSet Graph::vertices() const {
  VertexSet out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (const auto& [u, row] : adj_) {
    for (Vertex v : row) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet make_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  Graph out;
  for (Vertex v : s) {
    if (!g.has_vertex(v)) throw UnknownVertex("unknown vertex " + std::to_string(v));
    out.add_vertex(v);
  }
  for (Vertex v : s) {
    for (Vertex w : g.neighbours(v)) {
      if (v < w && out.has_vertex(w)) out.add_edge(v, w);
    }
  }
  return out;
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> s) {
  Graph out = g;
  for (Vertex v : make_set({s.begin(), s.end()})) out.remove_vertex(v);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::map<Vertex, bool> seen;
  for (Vertex root : g.vertices()) {
    if (seen[root]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

VertexSet greedy_maximal_independent_subset(const Graph& g, std::span<const Vertex> s) {
  VertexSet candidates = make_set({s.begin(), s.end()});
  VertexSet chosen;
  for (Vertex v : candidates) {
    if (!g.has_vertex(v)) throw UnknownVertex("unknown vertex " + std::to_string(v));
    bool blocked = std::any_of(g.neighbours(v).begin(), g.neighbours(v).end(), [&](Vertex w) {
      return std::binary_search(chosen.begin(), chosen.end(), w);
    });
    if (!blocked) chosen.push_back(v);  // ascending scan keeps `chosen` sorted
  }
  return chosen;
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
  VertexSet set = make_set({s.begin(), s.end()});
  for (Vertex v : set) {
    for (Vertex w : g.neighbours(v)) {
      if (std::binary_search(set.begin(), set.end(), w)) return false;
    }
  }
  return true;
}

}  // namespace recolour
