#include "recolour/reduce_mad.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "recolour/errors.hpp"
#include "recolour/ordering.hpp"

namespace recolour {

double MadReduceConfig::low_degree_threshold(int n) const {
  return static_cast<double>(k + 1) * 2.0 * std::sqrt(static_cast<double>(n));
}

int MadReduceConfig::peel_set_size(int n) const {
  return static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(n))));
}

namespace {

void require(bool cond, MadStats& stats, const std::string& what) {
  ++stats.asserts_checked;
  if (!cond) throw CertificateError("maximum average degree certificate failed: " + what);
}

// Inequalities behind the base case. Per component they follow from the
// average-degree bound alone; the totals additionally use the base-case
// hypothesis t <= (k+1) 2 sqrt(h).
void check_base_case(const Graph& g, int k, MadLevel& level, MadStats& stats) {
  const double h = static_cast<double>(g.n());
  for (const VertexSet& comp : connected_components(g)) {
    long long s = 0, t = 0, degree_sum = 0;
    for (Vertex v : comp) {
      int d = g.degree(v);
      degree_sum += d;
      if (d >= k + 2) ++s;
      if (d <= k) ++t;
    }
    long long hc = static_cast<long long>(comp.size());
    require(degree_sum < static_cast<long long>(k + 1) * hc, stats,
            "component average degree reaches k+1");
    require(s < static_cast<long long>(k) * t, stats, "component has s >= k t");
  }

  for (Vertex v : g.vertices()) {
    int d = g.degree(v);
    if (d >= k + 2) {
      ++level.high_degree;
      level.high_degree_sum += d;
      level.log_high_degree_product += std::log(static_cast<double>(d));
    }
  }
  const double kk = static_cast<double>(k);
  const double root = std::sqrt(h);
  require(static_cast<double>(level.high_degree) < kk * (kk + 1.0) * 2.0 * root, stats,
          "s >= k(k+1) 2 sqrt(h)");
  require(static_cast<double>(level.high_degree_sum) < 4.0 * kk * (kk + 1.0) * (kk + 1.0) * root,
          stats, "sum deg(u_i) >= 4k(k+1)^2 sqrt(h)");
  if (level.high_degree > 0) {
    require(level.log_high_degree_product <
                kk * (kk + 1.0) * 2.0 * root * std::log(2.0 * (kk + 1.0)) + 1e-9,
            stats, "prod deg(u_i) >= (2(k+1))^(k(k+1) 2 sqrt(h))");
  }
}

Sequence reduce_level(const Graph& g, int k, const Colouring& alpha, MadStats& stats) {
  const Colour top = k + 2;
  if (g.empty() || alpha.count(top) == 0) return Sequence{alpha, {}};

  MadReduceConfig cfg{k};
  MadLevel level;
  level.n = g.n();
  level.threshold = cfg.low_degree_threshold(g.n());
  for (Vertex v : g.vertices()) level.low_degree += g.degree(v) <= k ? 1 : 0;

  DegeneracyOrder sigma = degeneracy_ordering(g);
  if (sigma.width > k) {
    throw CertificateError("degeneracy " + std::to_string(sigma.width) +
                           " exceeds k; maximum average degree is not below k+1");
  }

  if (static_cast<double>(level.low_degree) <= level.threshold) {
    level.base_case = true;
    check_base_case(g, k, level, stats);
    stats.levels.push_back(level);
    DegenerateStats ds;
    Sequence out = reduce_one_colour_degenerate(g, k, alpha, sigma, &ds);
    stats.base = ds;
    return out;
  }

  // Inductive step: the largest colour class among low-degree vertices of a
  // greedy (k+1)-colouring along sigma.
  Colouring greedy = greedy_colouring(g, sigma);
  std::map<Colour, VertexSet> classes;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) <= k) classes[greedy.at(v)].push_back(v);
  }
  VertexSet peel;
  for (const auto& [c, members] : classes) {
    if (members.size() > peel.size()) peel = members;
  }
  level.peeled = static_cast<int>(peel.size());
  level.peel_required = cfg.peel_set_size(g.n());
  require(level.peeled >= level.peel_required, stats, "peeled set smaller than ceil(2 sqrt(n))");
  stats.levels.push_back(level);

  Graph rest = delete_vertices(g, peel);
  Sequence inner = reduce_level(rest, k, alpha.restricted_to(rest.vertices()), stats);

  Replay replay(g, alpha);
  auto in_peel = [&](Vertex v) { return std::binary_search(peel.begin(), peel.end(), v); };
  for (const Move& m : inner.moves) {
    for (Vertex u : g.neighbours(m.vertex)) {
      if (!in_peel(u) || replay.colour(u) != m.to) continue;
      int free_count = 0;
      Colour choice = 0;
      for (Colour c = 1; c <= top; ++c) {
        bool used = std::any_of(g.neighbours(u).begin(), g.neighbours(u).end(),
                                [&](Vertex w) { return replay.colour(w) == c; });
        if (used) continue;
        ++free_count;
        if (c != m.to && choice == 0) choice = c;
      }
      require(free_count >= 2 && choice != 0, stats, "peeled vertex has no spare colour");
      replay.recolour(u, choice);
      ++stats.reactive_moves;
    }
    replay.apply(m);
  }
  for (Vertex u : peel) {
    if (replay.colour(u) != top) continue;
    Colour c = smallest_free_colour(g, replay.current(), u, 1, k + 1);
    if (c == 0) throw InternalError("peeled vertex " + std::to_string(u) + " has no colour below k+2");
    replay.recolour(u, c);
  }
  return replay.sequence();
}

}  // namespace

Sequence reduce_one_colour_mad(const Graph& g, int k, const Colouring& alpha, MadStats* stats) {
  if (k < 2) throw PaletteTooSmall("k must be at least 2");
  if (alpha.palette() != k + 2) {
    throw PaletteTooSmall("colouring palette " + std::to_string(alpha.palette()) +
                          " is not k+2 = " + std::to_string(k + 2));
  }
  MadStats local;
  Sequence out = reduce_level(g, k, alpha, local);
  std::map<Vertex, int> per_vertex;
  for (const Move& m : out.moves) {
    local.max_moves_per_vertex = std::max(local.max_moves_per_vertex, ++per_vertex[m.vertex]);
  }
  if (stats) *stats = std::move(local);
  return out;
}

}  // namespace recolour
