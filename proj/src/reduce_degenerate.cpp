#include "recolour/reduce_degenerate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "recolour/errors.hpp"

namespace recolour {

DegenerateRecolourer::DegenerateRecolourer(const Graph& g, int k, const Colouring& alpha,
                                           const DegeneracyOrder& sigma)
    : k_(k), palette_(k + 2), start_(alpha), order_(sigma.order) {
  if (k < 1) throw PaletteTooSmall("k must be at least 1");
  if (alpha.palette() != k + 2) {
    throw PaletteTooSmall("colouring palette " + std::to_string(alpha.palette()) +
                          " is not k+2 = " + std::to_string(k + 2));
  }
  if (!alpha.covers(g)) throw UsageError("colouring does not cover the graph");
  if (auto bad = monochromatic_edge(g, alpha)) {
    throw ImproperResult("start colouring improper at edge " + std::to_string(bad->first) + "-" +
                         std::to_string(bad->second));
  }
  if (ordering_width(g, order_) > k) {
    throw WidthExceeded("ordering has back-degree above k = " + std::to_string(k));
  }

  auto pos = sigma.positions();
  std::size_t n = order_.size();
  adj_.resize(n);
  colour_.resize(n);
  counts_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order_[i];
    colour_[i] = alpha.at(v);
    for (Vertex w : g.neighbours(v)) adj_[i].push_back(static_cast<std::size_t>(pos[w]));
    std::sort(adj_[i].begin(), adj_[i].end());
    if (static_cast<int>(adj_[i].size()) >= k + 2) {
      profile_.u.push_back(v);
      profile_.degrees.push_back(static_cast<int>(adj_[i].size()));
    }
  }

  log_budget_.assign(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double d = static_cast<double>(adj_[i].size());
    log_budget_[i] = log_budget_[i + 1] + (adj_[i].size() >= static_cast<std::size_t>(k + 2) ? std::log(d) : 0.0);
  }
  double dn = static_cast<double>(std::max<std::size_t>(n, 1));
  stats_.log_length_bound = std::log(4.0) + 2.0 * std::log(dn) + log_budget_[0];
}

Colouring DegenerateRecolourer::current() const {
  Colouring c(palette_);
  for (std::size_t i = 0; i < order_.size(); ++i) c.set(order_[i], colour_[i]);
  return c;
}

Sequence DegenerateRecolourer::sequence() const { return Sequence{start_, moves_}; }

void DegenerateRecolourer::move(std::size_t pos, Colour to) {
  for (std::size_t w : adj_[pos]) {
    if (colour_[w] == to) {
      throw InternalError("recolouring vertex " + std::to_string(order_[pos]) + " to " +
                          std::to_string(to) + " clashes with " + std::to_string(order_[w]));
    }
  }
  moves_.emplace_back(order_[pos], colour_[pos], to);
  colour_[pos] = to;
  ++counts_[pos];
}

Colour DegenerateRecolourer::free_colour(std::size_t pos) const {
  std::vector<bool> used(static_cast<std::size_t>(palette_) + 1, false);
  used[static_cast<std::size_t>(colour_[pos])] = true;
  for (std::size_t w : adj_[pos]) used[static_cast<std::size_t>(colour_[w])] = true;
  for (Colour c = 1; c <= palette_; ++c) {
    if (!used[static_cast<std::size_t>(c)]) return c;
  }
  return 0;
}

// Advances the top frame by one stage. Returns false once the frame is done.
bool DegenerateRecolourer::step(std::vector<Frame>& stack) {
  Frame& f = stack.back();
  std::size_t h = f.h;
  const auto& nbrs = adj_[h];
  switch (f.stage) {
    case 0: {
      // Step 1: a colour absent from v_h and all its neighbours.
      if (Colour c = free_colour(h)) {
        move(h, c);
        return false;
      }
      if (static_cast<int>(nbrs.size()) == k_ + 1) {
        // Step 2: free the colour of the latest neighbour.
        std::size_t latest = nbrs.back();
        if (latest <= h) throw InternalError("latest neighbour precedes the target");
        f.target = colour_[latest];
        f.stage = 2;
        stack.push_back(Frame{latest, 0, 0, 0});
        return true;
      }
      // Step 3(a): a colour absent from v_h and its earlier neighbours.
      std::vector<bool> used(static_cast<std::size_t>(palette_) + 1, false);
      used[static_cast<std::size_t>(colour_[h])] = true;
      for (std::size_t w : nbrs) {
        if (w < h) used[static_cast<std::size_t>(colour_[w])] = true;
      }
      Colour c = 1;
      while (c <= palette_ && used[static_cast<std::size_t>(c)]) ++c;
      if (c > palette_) throw InternalError("no colour free on the earlier neighbourhood");
      f.target = c;
      f.stage = 3;
      f.next = static_cast<std::size_t>(std::upper_bound(nbrs.begin(), nbrs.end(), h) - nbrs.begin());
      return true;
    }
    case 2:
      move(h, f.target);
      return false;
    case 3: {
      // Step 3(c): later neighbours in ascending order, checked at this point.
      while (f.next < nbrs.size()) {
        std::size_t w = nbrs[f.next++];
        if (colour_[w] == f.target) {
          stack.push_back(Frame{w, 0, 0, 0});
          return true;
        }
      }
      move(h, f.target);  // Step 3(d)
      return false;
    }
    default:
      throw InternalError("corrupt recolour frame");
  }
}

std::size_t DegenerateRecolourer::recolour_vertex(std::size_t h) {
  if (h >= order_.size()) throw UsageError("position out of range");
  std::fill(counts_.begin(), counts_.end(), 0);
  std::size_t before = moves_.size();
  Colour initial = colour_[h];

  std::vector<Frame> stack{Frame{h, 0, 0, 0}};
  while (!stack.empty()) {
    if (!step(stack)) stack.pop_back();
  }

  for (std::size_t i = 0; i < h; ++i) {
    if (counts_[i] != 0) {
      throw CertificateError("vertex " + std::to_string(order_[i]) + " before the target moved");
    }
  }
  if (counts_[h] != 1 || colour_[h] == initial) {
    throw CertificateError("target vertex " + std::to_string(order_[h]) + " moved " +
                           std::to_string(counts_[h]) + " times");
  }
  for (std::size_t i = h + 1; i < order_.size(); ++i) {
    if (counts_[i] > 0 && std::log(static_cast<double>(counts_[i])) > log_budget_[h] + 1e-9) {
      throw CertificateError("vertex " + std::to_string(order_[i]) + " moved " +
                             std::to_string(counts_[i]) + " times, above its degree-product bound");
    }
    stats_.max_moves_per_vertex = std::max(stats_.max_moves_per_vertex, counts_[i]);
  }
  stats_.max_moves_per_vertex = std::max(stats_.max_moves_per_vertex, counts_[h]);

  std::size_t made = moves_.size() - before;
  ++stats_.calls;
  ++stats_.property_checks;
  stats_.moves += made;
  return made;
}

Sequence reduce_one_colour_degenerate(const Graph& g, int k, const Colouring& alpha,
                                      const DegeneracyOrder& sigma, DegenerateStats* stats) {
  DegenerateRecolourer engine(g, k, alpha, sigma);
  const Colour top = k + 2;
  std::size_t next = 0;
  for (std::size_t calls = 0;; ++calls) {
    while (next < engine.size() && engine.colour_at(next) != top) ++next;
    if (next == engine.size()) break;
    if (calls >= engine.size()) throw InternalError("colour elimination did not progress");
    engine.recolour_vertex(next);
  }
  Sequence out = engine.sequence();
  if (!out.moves.empty() &&
      std::log(static_cast<double>(out.moves.size())) > engine.stats().log_length_bound + 1e-9) {
    throw CertificateError("sequence length " + std::to_string(out.moves.size()) +
                           " exceeds 4 n^2 prod deg(u_i)");
  }
  if (stats) *stats = engine.stats();
  return out;
}

}  // namespace recolour
