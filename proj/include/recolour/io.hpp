#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "recolour/colouring.hpp"
#include "recolour/connect.hpp"
#include "recolour/graph.hpp"
#include "recolour/moves.hpp"
#include "recolour/partition.hpp"
#include "recolour/pipeline.hpp"
#include "recolour/planar65.hpp"
#include "recolour/reduce_degenerate.hpp"
#include "recolour/reduce_mad.hpp"

// Text formats. All are line based, 1-indexed, and every parse error is a
// ParseError carrying the offending line number.
//
//   graph      "p edge <n> <m>" then m lines "e <u> <v>"; "c ..." comments
//   colouring  one "<v> <c>" line per vertex
//   sequence   "s <n> <k> <len>" then len lines "<v> <c>" (target colours;
//              source colours are recomputed from the start colouring)
//   partition  one "<part> <v>" line per vertex, parts numbered from 1
//
// Blank lines and lines starting with '#' are ignored everywhere.

namespace recolour::io {

Graph parse_graph(std::istream& in);
std::string emit_graph(const Graph& g);

/// Every vertex of g must appear exactly once with a colour in 1..k.
Colouring parse_colouring(std::istream& in, const Graph& g, int k);
std::string emit_colouring(const Colouring& c);

/// Rebuilds moves against `start`; the header must match |V(g)| and the
/// start palette.
Sequence parse_sequence(std::istream& in, const Graph& g, const Colouring& start);
std::string emit_sequence(const Sequence& s, int n);

/// Parts in order of their index; every vertex of g must appear once.
std::vector<VertexSet> parse_partition(std::istream& in, const Graph& g);
std::string emit_partition(const VertexPartition& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

nlohmann::json to_json(const PipelineReport& r);
nlohmann::json to_json(const DegenerateStats& s);
nlohmann::json to_json(const MadStats& s);
nlohmann::json to_json(const Planar65Stats& s);
nlohmann::json to_json(const ConnectStats& s);
nlohmann::json to_json(const VertexPartition& p);

}  // namespace recolour::io
