#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"

namespace recolour {

/// One single-vertex recolouring. `from` is stored so sequences can be
/// reversed without replaying them.
struct Move {
  Vertex vertex;
  Colour from;
  Colour to;

  /// Throws InvalidMove when from == to or either colour is below 1.
  Move(Vertex v, Colour from_colour, Colour to_colour);

  Move reversed() const { return Move(vertex, to, from); }
  bool operator==(const Move&) const = default;
};

struct Sequence {
  Colouring start;
  std::vector<Move> moves;

  int palette() const { return start.palette(); }
  std::size_t length() const { return moves.size(); }
  /// Colouring reached after all moves (no validity checks).
  Colouring end() const;
};

/// c with m applied. Throws StaleFromColour if c(m.vertex) != m.from,
/// InvalidMove if m.to is outside the palette, ImproperResult (naming the
/// edge) if the result has a monochromatic edge at m.vertex.
Colouring apply_move(const Graph& g, const Colouring& c, const Move& m);
void apply_move_in_place(const Graph& g, Colouring& c, const Move& m);

struct VerifyReport {
  bool ok = true;
  /// Index of the first offending move; empty when the failure concerns the
  /// endpoints rather than a move.
  std::optional<std::size_t> failed_index;
  std::string reason;
  Colouring end;
};

/// Replays s on g. Succeeds iff the start is a proper total colouring, every
/// move is valid, and the final colouring equals `expected_end` when given.
VerifyReport verify_sequence(const Graph& g, const Sequence& s,
                             const std::optional<Colouring>& expected_end = std::nullopt);

Sequence reverse(const Sequence& s);
/// Throws EndpointMismatch unless a.end() == b.start.
Sequence concat(const Sequence& a, const Sequence& b);
/// Merges runs of consecutive moves on the same vertex into one move (or none
/// when the run returns to its starting colour). Endpoints are unchanged and
/// every intermediate colouring of the result also occurs in the input.
Sequence coalesce(const Sequence& s);

/// Records a sequence while keeping the current colouring. Every recolouring
/// is validated as it is made.
class Replay {
 public:
  Replay(const Graph& g, Colouring start);

  void recolour(Vertex v, Colour to);
  /// Appends an already-built move, validating it against the current state.
  void apply(const Move& m);
  Colour colour(Vertex v) const { return current_.at(v); }
  const Colouring& current() const { return current_; }
  const Graph& graph() const { return *g_; }
  std::size_t length() const { return moves_.size(); }
  Sequence sequence() const { return Sequence{start_, moves_}; }

 private:
  const Graph* g_;
  Colouring start_;
  Colouring current_;
  std::vector<Move> moves_;
};

}  // namespace recolour
