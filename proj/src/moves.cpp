#include "recolour/moves.hpp"

#include <algorithm>

#include "recolour/errors.hpp"

namespace recolour {

Move::Move(Vertex v, Colour from_colour, Colour to_colour)
    : vertex(v), from(from_colour), to(to_colour) {
  if (from == to) {
    throw InvalidMove("no-op move on vertex " + std::to_string(v) + " (colour " +
                      std::to_string(from) + ")");
  }
  if (from < 1 || to < 1) throw InvalidMove("move on vertex " + std::to_string(v) + " uses colour < 1");
}

Colouring Sequence::end() const {
  Colouring c = start;
  for (const Move& m : moves) c.set(m.vertex, m.to);
  return c;
}

void apply_move_in_place(const Graph& g, Colouring& c, const Move& m) {
  if (!g.has_vertex(m.vertex)) throw UnknownVertex("unknown vertex " + std::to_string(m.vertex));
  Colour current = c.at(m.vertex);
  if (current != m.from) {
    throw StaleFromColour("vertex " + std::to_string(m.vertex) + " has colour " +
                          std::to_string(current) + ", move expects " + std::to_string(m.from));
  }
  if (m.to > c.palette()) {
    throw InvalidMove("colour " + std::to_string(m.to) + " exceeds palette " +
                      std::to_string(c.palette()));
  }
  for (Vertex w : g.neighbours(m.vertex)) {
    if (c.at(w) == m.to) {
      throw ImproperResult("edge " + std::to_string(m.vertex) + "-" + std::to_string(w) +
                           " would be monochromatic (colour " + std::to_string(m.to) + ")");
    }
  }
  c.set(m.vertex, m.to);
}

Colouring apply_move(const Graph& g, const Colouring& c, const Move& m) {
  Colouring out = c;
  apply_move_in_place(g, out, m);
  return out;
}

VerifyReport verify_sequence(const Graph& g, const Sequence& s,
                             const std::optional<Colouring>& expected_end) {
  VerifyReport report;
  report.end = s.start;
  if (!s.start.covers(g)) {
    report.ok = false;
    report.reason = "start colouring does not cover the graph";
    return report;
  }
  if (auto bad = monochromatic_edge(g, s.start)) {
    report.ok = false;
    report.reason = "start colouring improper at edge " + std::to_string(bad->first) + "-" +
                    std::to_string(bad->second);
    return report;
  }
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    try {
      apply_move_in_place(g, report.end, s.moves[i]);
    } catch (const Error& e) {
      report.ok = false;
      report.failed_index = i;
      report.reason = e.what();
      return report;
    }
  }
  if (expected_end && !(report.end.assignment() == expected_end->assignment())) {
    report.ok = false;
    report.reason = "final colouring differs from the expected end";
    for (const auto& [v, c] : expected_end->assignment()) {
      if (!report.end.contains(v) || report.end.at(v) != c) {
        report.reason += " (first at vertex " + std::to_string(v) + ")";
        break;
      }
    }
  }
  return report;
}

Sequence reverse(const Sequence& s) {
  Sequence out{s.end(), {}};
  out.moves.reserve(s.moves.size());
  for (auto it = s.moves.rbegin(); it != s.moves.rend(); ++it) out.moves.push_back(it->reversed());
  return out;
}

Sequence concat(const Sequence& a, const Sequence& b) {
  if (a.palette() != b.palette()) throw EndpointMismatch("palettes differ");
  if (!(a.end() == b.start)) throw EndpointMismatch("end of first sequence is not start of second");
  Sequence out = a;
  out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
  return out;
}

Sequence coalesce(const Sequence& s) {
  Sequence out{s.start, {}};
  for (const Move& m : s.moves) {
    if (out.moves.empty() || out.moves.back().vertex != m.vertex) {
      out.moves.push_back(m);
    } else if (out.moves.back().from == m.to) {
      out.moves.pop_back();
    } else {
      out.moves.back() = Move(m.vertex, out.moves.back().from, m.to);
    }
  }
  return out;
}

Replay::Replay(const Graph& g, Colouring start) : g_(&g), start_(start), current_(std::move(start)) {}

void Replay::recolour(Vertex v, Colour to) { apply(Move(v, current_.at(v), to)); }

void Replay::apply(const Move& m) {
  apply_move_in_place(*g_, current_, m);
  moves_.push_back(m);
}

}  // namespace recolour
