#include "recolour/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "recolour/errors.hpp"

namespace recolour::io {

namespace {

// Splits a line into integer fields after an optional leading tag.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-blank, non-comment line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    ++number_;
    return false;
  }

  int line() const { return number_; }

  std::vector<long long> ints(std::istringstream& ss, std::size_t count) const {
    std::vector<long long> out(count);
    for (auto& x : out) {
      if (!(ss >> x)) throw ParseError(number_, "expected " + std::to_string(count) + " integers");
    }
    std::string extra;
    if (ss >> extra) throw ParseError(number_, "unexpected trailing field '" + extra + "'");
    return out;
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

}  // namespace

Graph parse_graph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  bool header = false;
  long long n = 0, m = 0, seen = 0;
  Graph g;
  while (reader.next(line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (header) throw ParseError(reader.line(), "duplicate problem line");
      if (!(ss >> kind) || kind != "edge") throw ParseError(reader.line(), "expected 'p edge n m'");
      auto v = reader.ints(ss, 2);
      n = v[0];
      m = v[1];
      if (n < 0 || m < 0) throw ParseError(reader.line(), "negative size");
      g = Graph::with_vertices(static_cast<int>(n));
      header = true;
    } else if (tag == "e") {
      if (!header) throw ParseError(reader.line(), "edge before problem line");
      auto v = reader.ints(ss, 2);
      if (v[0] < 1 || v[0] > n || v[1] < 1 || v[1] > n) {
        throw ParseError(reader.line(), "unknown vertex in edge");
      }
      if (v[0] == v[1]) throw ParseError(reader.line(), "self-loop");
      if (!g.add_edge(static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1]))) {
        throw ParseError(reader.line(), "duplicate edge");
      }
      ++seen;
    } else {
      throw ParseError(reader.line(), "malformed line '" + line + "'");
    }
  }
  if (!header) throw ParseError(reader.line(), "missing problem line");
  if (seen != m) {
    throw ParseError(reader.line(), "header announces " + std::to_string(m) + " edges, found " +
                                        std::to_string(seen));
  }
  return g;
}

std::string emit_graph(const Graph& g) {
  VertexSet vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] != static_cast<Vertex>(i + 1)) throw UsageError("graph labels must be 1..n to emit");
  }
  std::ostringstream out;
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

Colouring parse_colouring(std::istream& in, const Graph& g, int k) {
  LineReader reader(in);
  std::string line;
  Colouring c(k);
  while (reader.next(line)) {
    std::istringstream ss(line);
    auto v = reader.ints(ss, 2);
    Vertex vertex = static_cast<Vertex>(v[0]);
    if (!g.has_vertex(vertex)) throw ParseError(reader.line(), "unknown vertex " + std::to_string(v[0]));
    if (c.contains(vertex)) throw ParseError(reader.line(), "vertex coloured twice");
    if (v[1] < 1 || v[1] > k) {
      throw ParseError(reader.line(), "colour " + std::to_string(v[1]) + " out of range 1.." +
                                          std::to_string(k));
    }
    c.set(vertex, static_cast<Colour>(v[1]));
  }
  if (c.size() != static_cast<std::size_t>(g.n())) {
    for (Vertex v : g.vertices()) {
      if (!c.contains(v)) throw ParseError(reader.line(), "vertex " + std::to_string(v) + " uncoloured");
    }
  }
  return c;
}

std::string emit_colouring(const Colouring& c) {
  std::ostringstream out;
  for (const auto& [v, col] : c.assignment()) out << v << ' ' << col << '\n';
  return out.str();
}

Sequence parse_sequence(std::istream& in, const Graph& g, const Colouring& start) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing sequence header");
  std::istringstream hs(line);
  std::string tag;
  hs >> tag;
  if (tag != "s") throw ParseError(reader.line(), "expected 's n k len'");
  auto h = reader.ints(hs, 3);
  if (h[0] != g.n()) throw ParseError(reader.line(), "header vertex count does not match the graph");
  if (h[1] != start.palette()) throw ParseError(reader.line(), "header palette does not match");
  if (h[2] < 0) throw ParseError(reader.line(), "negative length");

  Sequence s{start, {}};
  Colouring current = start;
  while (reader.next(line)) {
    std::istringstream ss(line);
    auto v = reader.ints(ss, 2);
    Vertex vertex = static_cast<Vertex>(v[0]);
    if (!g.has_vertex(vertex)) throw ParseError(reader.line(), "unknown vertex " + std::to_string(v[0]));
    if (v[1] < 1 || v[1] > start.palette()) throw ParseError(reader.line(), "colour out of range");
    Colour from = current.at(vertex);
    if (from == v[1]) throw ParseError(reader.line(), "no-op move");
    s.moves.emplace_back(vertex, from, static_cast<Colour>(v[1]));
    current.set(vertex, static_cast<Colour>(v[1]));
  }
  if (static_cast<long long>(s.moves.size()) != h[2]) {
    throw ParseError(reader.line(), "header announces " + std::to_string(h[2]) + " moves, found " +
                                        std::to_string(s.moves.size()));
  }
  return s;
}

std::string emit_sequence(const Sequence& s, int n) {
  std::ostringstream out;
  out << "s " << n << ' ' << s.palette() << ' ' << s.moves.size() << '\n';
  for (const Move& m : s.moves) out << m.vertex << ' ' << m.to << '\n';
  return out.str();
}

std::vector<VertexSet> parse_partition(std::istream& in, const Graph& g) {
  LineReader reader(in);
  std::string line;
  std::map<long long, VertexSet> parts;
  std::map<Vertex, bool> seen;
  while (reader.next(line)) {
    std::istringstream ss(line);
    auto v = reader.ints(ss, 2);
    Vertex vertex = static_cast<Vertex>(v[1]);
    if (v[0] < 1) throw ParseError(reader.line(), "part index must be positive");
    if (!g.has_vertex(vertex)) throw ParseError(reader.line(), "unknown vertex " + std::to_string(v[1]));
    if (seen[vertex]) throw ParseError(reader.line(), "vertex listed twice");
    seen[vertex] = true;
    parts[v[0]].push_back(vertex);
  }
  if (seen.size() != static_cast<std::size_t>(g.n())) {
    throw ParseError(reader.line(), "partition does not cover every vertex");
  }
  std::vector<VertexSet> out;
  long long expected = 1;
  for (auto& [index, members] : parts) {
    while (expected < index) {
      out.emplace_back();  // empty parts are allowed
      ++expected;
    }
    out.push_back(make_set(std::move(members)));
    ++expected;
  }
  return out;
}

std::string emit_partition(const VertexPartition& p) {
  std::map<Vertex, std::size_t> owner;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (Vertex v : p.parts[i].part) owner[v] = i + 1;
  }
  std::ostringstream out;
  for (const auto& [v, part] : owner) out << part << ' ' << v << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << contents;
}

nlohmann::json to_json(const PipelineReport& r) {
  return {
      {"n", r.n},
      {"phase_mad_alpha", r.mad_alpha},
      {"phase_planar65_alpha", r.planar65_alpha},
      {"phase_pin_alpha", r.pin_alpha},
      {"phase_connect", r.connect},
      {"phase_pin_beta", r.pin_beta},
      {"phase_planar65_beta", r.planar65_beta},
      {"phase_mad_beta", r.mad_beta},
      {"coalesced", r.coalesced},
      {"total", r.total},
      {"fitted_exponent", r.fitted_exponent},
      {"partition_strategy", r.partition_strategy},
      {"mad_asserts_passed", r.mad_asserts},
      {"planar65_levels", r.planar65_levels},
      {"kempe_swaps", r.kempe_swaps},
      {"connect_soft_bound", r.connect_soft_bound},
      {"connect_soft_exceeded", r.connect_soft_exceeded},
  };
}

nlohmann::json to_json(const DegenerateStats& s) {
  return {
      {"calls", s.calls},
      {"moves", s.moves},
      {"property_checks_passed", s.property_checks},
      {"max_moves_per_vertex", s.max_moves_per_vertex},
      {"log_length_bound", s.log_length_bound},
  };
}

nlohmann::json to_json(const MadStats& s) {
  std::size_t base = 0, inductive = 0, min_slack = 0;
  bool first = true;
  for (const MadLevel& l : s.levels) {
    if (l.base_case) {
      ++base;
    } else {
      ++inductive;
      std::size_t slack = static_cast<std::size_t>(l.peeled - l.peel_required);
      min_slack = first ? slack : std::min(min_slack, slack);
      first = false;
    }
  }
  return {
      {"levels", s.levels.size()},
      {"base_levels", base},
      {"inductive_levels", inductive},
      {"min_peel_slack", min_slack},
      {"asserts_passed", s.asserts_checked},
      {"reactive_moves", s.reactive_moves},
      {"max_moves_per_vertex", s.max_moves_per_vertex},
      {"base_calls", s.base.calls},
      {"base_moves", s.base.moves},
  };
}

nlohmann::json to_json(const Planar65Stats& s) {
  double min_s = 1.0, min_i = 1.0;
  for (const SpecialSetReport& r : s.levels) {
    min_s = std::min(min_s, r.low_degree_ratio);
    min_i = std::min(min_i, r.chosen_ratio);
  }
  return {
      {"levels", s.levels.size()},
      {"min_low_degree_ratio", s.levels.empty() ? 0.0 : min_s},
      {"min_independent_ratio", s.levels.empty() ? 0.0 : min_i},
      {"reactive_moves", s.reactive_moves},
      {"buffer_cleanups", s.buffer_cleanups},
      {"direct_fixes", s.direct_fixes},
      {"kempe_fixes", s.kempe_fixes},
      {"component_swaps", s.component_swaps},
      {"swap_boundary_checks", s.swap_boundary_checks},
  };
}

nlohmann::json to_json(const ConnectStats& s) {
  return {
      {"length", s.length},
      {"shield_moves", s.shield_moves},
      {"final_moves", s.final_moves},
      {"max_moves_per_vertex", s.max_moves_per_vertex},
      {"soft_bound", s.soft_bound},
      {"soft_exceeded", s.soft_exceeded},
  };
}

nlohmann::json to_json(const VertexPartition& p) {
  nlohmann::json parts = nlohmann::json::array();
  for (const PartitionCertificate& c : p.parts) {
    parts.push_back({
        {"size", c.part.size()},
        {"kind", c.kind == PartKind::kIndependent ? "independent" : "degenerate"},
        {"degeneracy", c.degeneracy},
        {"witness_width", c.witness.width},
    });
  }
  return {{"strategy", p.strategy}, {"parts", parts}};
}

}  // namespace recolour::io
