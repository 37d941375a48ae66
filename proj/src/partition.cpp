#include "recolour/partition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "recolour/errors.hpp"

namespace recolour {

namespace {

PartitionCertificate independent_part(VertexSet part) {
  PartitionCertificate c;
  c.part = std::move(part);
  c.kind = PartKind::kIndependent;
  return c;
}

PartitionCertificate degenerate_part(const Graph& g, VertexSet part, int bound) {
  PartitionCertificate c;
  c.witness = degeneracy_ordering(induced_subgraph(g, part));
  c.part = std::move(part);
  c.kind = PartKind::kDegenerate;
  c.degeneracy = bound;
  return c;
}

VertexSet complement(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : g.vertices()) {
    if (!std::binary_search(s.begin(), s.end(), v)) out.push_back(v);
  }
  return out;
}

// Sides of a proper 2-colouring rooted at the smallest label of each
// component, or nothing if g has an odd cycle.
std::optional<VertexSet> bipartite_side(const Graph& g) {
  std::map<Vertex, int> side;
  for (Vertex root : g.vertices()) {
    if (side.contains(root)) continue;
    side[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbours(v)) {
        auto it = side.find(w);
        if (it == side.end()) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (it->second == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet out;
  for (const auto& [v, s] : side) {
    if (s == 0) out.push_back(v);
  }
  return out;
}

// True iff the subgraph induced by `in` has a non-empty 4-core, i.e. is not
// 3-degenerate.
bool has_four_core(const Graph& g, const std::map<Vertex, bool>& in) {
  std::map<Vertex, int> deg;
  std::vector<Vertex> low;
  for (const auto& [v, member] : in) {
    if (!member) continue;
    int d = 0;
    for (Vertex w : g.neighbours(v)) d += in.at(w) ? 1 : 0;
    deg[v] = d;
    if (d < 4) low.push_back(v);
  }
  std::size_t alive = deg.size();
  std::map<Vertex, bool> gone;
  while (!low.empty()) {
    Vertex v = low.back();
    low.pop_back();
    if (gone[v]) continue;
    gone[v] = true;
    --alive;
    for (Vertex w : g.neighbours(v)) {
      if (!in.at(w) || gone[w]) continue;
      if (--deg[w] == 3) low.push_back(w);
    }
  }
  return alive > 0;
}

class Backtracker {
 public:
  Backtracker(const Graph& g, std::uint64_t cap) : g_(g), cap_(cap) {
    order_ = g.vertices();
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (Vertex v : order_) state_[v] = kOpen;
  }

  std::optional<VertexSet> run() {
    if (!search()) return std::nullopt;
    VertexSet out;
    for (const auto& [v, s] : state_) {
      if (s == kIn) out.push_back(v);
    }
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  enum State { kOpen, kIn, kOut };

  bool blocked(Vertex v) const {
    return std::any_of(g_.neighbours(v).begin(), g_.neighbours(v).end(),
                       [&](Vertex w) { return state_.at(w) == kIn; });
  }

  bool search() {
    if (++nodes_ > cap_) throw SearchExhausted("partition search exceeded node cap");
    // Vertices that can no longer join I are certainly in D.
    std::map<Vertex, bool> forced;
    std::optional<Vertex> branch;
    for (Vertex v : order_) {
      bool out = state_[v] == kOut || (state_[v] == kOpen && blocked(v));
      forced[v] = out;
      if (state_[v] == kOpen && !out && !branch) branch = v;
    }
    if (has_four_core(g_, forced)) return false;
    if (!branch) return true;
    state_[*branch] = kIn;
    if (search()) return true;
    state_[*branch] = kOut;
    if (search()) return true;
    state_[*branch] = kOpen;
    return false;
  }

  const Graph& g_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::map<Vertex, State> state_;
};

}  // namespace

void certify_partition(const Graph& g, const VertexPartition& p) {
  std::map<Vertex, int> owner;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (Vertex v : p.parts[i].part) {
      if (!g.has_vertex(v)) throw CertificateError("part contains unknown vertex " + std::to_string(v));
      if (!owner.emplace(v, static_cast<int>(i)).second) {
        throw CertificateError("vertex " + std::to_string(v) + " lies in two parts");
      }
    }
  }
  if (owner.size() != static_cast<std::size_t>(g.n())) throw CertificateError("parts do not cover V");

  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const PartitionCertificate& c = p.parts[i];
    const std::string label = "part " + std::to_string(i + 1);
    if (c.kind == PartKind::kIndependent) {
      if (!is_independent(g, c.part)) throw CertificateError(label + " spans an edge");
      continue;
    }
    Graph sub = induced_subgraph(g, c.part);
    if (degeneracy(sub) > c.degeneracy) {
      throw CertificateError(label + " is not " + std::to_string(c.degeneracy) + "-degenerate");
    }
    if (c.witness.order.size() != c.part.size() || ordering_width(sub, c.witness.order) > c.degeneracy) {
      throw CertificateError(label + " witness ordering is invalid");
    }
  }
}

VertexPartition mihok_wood_partition(const Graph& g, int k) {
  if (k < 1) throw UsageError("k must be positive");
  DegeneracyOrder sigma = degeneracy_ordering(g);
  if (sigma.width > k) {
    throw NotDegenerateEnough("graph has degeneracy " + std::to_string(sigma.width) + " > " +
                              std::to_string(k));
  }
  std::map<Vertex, bool> in_i;
  VertexSet independent, rest;
  DegeneracyOrder rest_order;
  for (Vertex v : sigma.order) {
    bool blocked = std::any_of(g.neighbours(v).begin(), g.neighbours(v).end(),
                               [&](Vertex w) { return in_i[w]; });
    in_i[v] = !blocked;
    (blocked ? rest : independent).push_back(v);
    if (blocked) rest_order.order.push_back(v);
  }
  std::sort(independent.begin(), independent.end());
  std::sort(rest.begin(), rest.end());
  Graph sub = induced_subgraph(g, rest);
  rest_order.width = ordering_width(sub, rest_order.order);
  if (rest_order.width > k - 1) {
    throw InternalError("greedy split left back-degree " + std::to_string(rest_order.width));
  }

  VertexPartition out;
  out.strategy = "degenerate";
  out.parts.push_back(independent_part(std::move(independent)));
  PartitionCertificate f;
  f.part = std::move(rest);
  f.kind = PartKind::kDegenerate;
  f.degeneracy = k - 1;
  f.witness = std::move(rest_order);
  out.parts.push_back(std::move(f));
  return out;
}

VertexPartition certify_thomassen(const Graph& g, const VertexSet& independent) {
  VertexSet i = make_set(independent);
  VertexPartition out;
  out.strategy = "supplied";
  out.parts.push_back(independent_part(i));
  out.parts.push_back(degenerate_part(g, complement(g, i), 3));
  certify_partition(g, out);
  return out;
}

VertexPartition thomassen_partition(const Graph& g, const ThomassenConfig& cfg) {
  if (cfg.allow_fast_paths) {
    if (auto side = bipartite_side(g)) {
      VertexPartition out = certify_thomassen(g, *side);
      out.strategy = "bipartite";
      return out;
    }
    int width = degeneracy(g);
    if (width <= 4) {
      VertexPartition mw = mihok_wood_partition(g, std::max(width, 1));
      VertexPartition out = certify_thomassen(g, mw.parts[0].part);
      out.strategy = "degenerate";
      return out;
    }
  }

  if (cfg.allow_random) {
    std::mt19937_64 rng(cfg.seed);
    // Top 53 bits scaled to [0, 3), independent of the library's distributions.
    auto noise = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 3.0; };
    for (int attempt = 0; attempt < cfg.random_attempts; ++attempt) {
      std::vector<std::pair<double, Vertex>> keyed;
      for (Vertex v : g.vertices()) keyed.emplace_back(-(g.degree(v) + noise()), v);
      std::sort(keyed.begin(), keyed.end());
      std::map<Vertex, bool> in_i;
      VertexSet chosen;
      for (const auto& [_, v] : keyed) {
        bool blocked = std::any_of(g.neighbours(v).begin(), g.neighbours(v).end(),
                                   [&](Vertex w) { return in_i[w]; });
        if (!blocked) {
          in_i[v] = true;
          chosen.push_back(v);
        }
      }
      chosen = make_set(chosen);
      if (degeneracy(induced_subgraph(g, complement(g, chosen))) <= 3) {
        VertexPartition out = certify_thomassen(g, chosen);
        out.strategy = "randomized";
        return out;
      }
    }
  }

  Backtracker search(g, cfg.node_cap);
  auto found = search.run();
  if (!found) throw SearchExhausted("no independent set leaves a 3-degenerate remainder");
  VertexPartition out = certify_thomassen(g, *found);
  out.strategy = "backtracking";
  return out;
}

VertexPartition certify_corollary(const Graph& g, const VertexSet& first, const VertexSet& second) {
  VertexSet i1 = make_set(first);
  VertexSet i2 = make_set(second);
  VertexSet both = i1;
  both.insert(both.end(), i2.begin(), i2.end());
  VertexPartition out;
  out.strategy = "supplied";
  out.parts.push_back(independent_part(i1));
  out.parts.push_back(independent_part(i2));
  out.parts.push_back(degenerate_part(g, complement(g, make_set(both)), 2));
  certify_partition(g, out);
  return out;
}

VertexPartition corollary_partition(const Graph& g, const ThomassenConfig& cfg) {
  VertexPartition first = thomassen_partition(g, cfg);
  const VertexSet& d = first.parts[1].part;
  VertexPartition second = mihok_wood_partition(induced_subgraph(g, d), 3);
  VertexPartition out = certify_corollary(g, first.parts[0].part, second.parts[0].part);
  out.strategy = first.strategy;
  return out;
}

}  // namespace recolour
