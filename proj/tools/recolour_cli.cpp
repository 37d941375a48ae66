// Command-line front end: sequence producers, the verifier, the brute-force
// oracle and the input generators.
//
// Exit codes: 0 success (sequence outputs verified), 1 usage or parse error,
// 2 certificate or verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "recolour/connect.hpp"
#include "recolour/errors.hpp"
#include "recolour/generators.hpp"
#include "recolour/io.hpp"
#include "recolour/oracle.hpp"
#include "recolour/ordering.hpp"
#include "recolour/partition.hpp"
#include "recolour/pipeline.hpp"
#include "recolour/planar65.hpp"
#include "recolour/reduce_degenerate.hpp"
#include "recolour/reduce_mad.hpp"

namespace {

using namespace recolour;

struct Options {
  std::string graph, from, to, seq, out, stats_json, partition, family, kind = "corollary";
  std::vector<int> params;
  int colours = 0;
  int degeneracy = -1;
  std::uint64_t seed = 1;
  double budget_factor = 50.0;
  std::size_t hard_cap = 50'000'000;
  bool check = true;
};

Graph load_graph(const Options& o) {
  if (o.graph.empty()) throw UsageError("--graph is required");
  std::istringstream in(io::read_file(o.graph));
  return io::parse_graph(in);
}

Colouring load_colouring(const std::string& path, const Graph& g, int k, const char* flag) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  if (k < 1) throw UsageError("--colours is required");
  std::istringstream in(io::read_file(path));
  return io::parse_colouring(in, g, k);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    io::write_file(o.out, text);
  }
}

void write_stats(const Options& o, const nlohmann::json& stats) {
  if (!o.stats_json.empty()) io::write_file(o.stats_json, stats.dump(2) + "\n");
}

// Verifies (unless --no-check) and writes a produced sequence.
void finish_sequence(const Options& o, const Graph& g, const Sequence& s,
                     const std::optional<Colouring>& expected_end) {
  if (o.check) {
    VerifyReport r = verify_sequence(g, s, expected_end);
    if (!r.ok) {
      throw CertificateError("output failed verification" +
                             (r.failed_index ? " at move " + std::to_string(*r.failed_index) : "") +
                             ": " + r.reason);
    }
  }
  emit(o, io::emit_sequence(s, g.n()));
}

int run_pipeline(const Options& o) {
  Graph g = load_graph(o);
  int k = o.colours ? o.colours : kPipelinePalette;
  Colouring alpha = load_colouring(o.from, g, k, "--from");
  Colouring beta = load_colouring(o.to, g, k, "--to");
  PipelineConfig cfg;
  cfg.partition.seed = o.seed;
  cfg.budget.factor = o.budget_factor;
  cfg.budget.hard_cap = o.hard_cap;
  PipelineResult r = seven_colour_path(g, alpha, beta, cfg);
  finish_sequence(o, g, r.sequence, beta);
  nlohmann::json stats = io::to_json(r.report);
  stats["verified"] = o.check;
  write_stats(o, stats);
  return 0;
}

int run_reduce_degenerate(const Options& o) {
  Graph g = load_graph(o);
  Colouring alpha = load_colouring(o.from, g, o.colours, "--from");
  DegenerateStats stats;
  Sequence s = reduce_one_colour_degenerate(g, o.colours - 2, alpha, degeneracy_ordering(g), &stats);
  finish_sequence(o, g, s, std::nullopt);
  write_stats(o, io::to_json(stats));
  return 0;
}

int run_reduce_mad(const Options& o) {
  Graph g = load_graph(o);
  Colouring alpha = load_colouring(o.from, g, o.colours, "--from");
  MadStats stats;
  Sequence s = reduce_one_colour_mad(g, o.colours - 2, alpha, &stats);
  finish_sequence(o, g, s, std::nullopt);
  write_stats(o, io::to_json(stats));
  return 0;
}

int run_planar65(const Options& o) {
  Graph g = load_graph(o);
  Colouring gamma = load_colouring(o.from, g, o.colours ? o.colours : kPlanarPalette, "--from");
  Planar65Stats stats;
  Sequence s = reduce_planar_6_to_5(g, gamma, &stats);
  finish_sequence(o, g, s, std::nullopt);
  write_stats(o, io::to_json(stats));
  return 0;
}

int run_connect(const Options& o) {
  Graph g = load_graph(o);
  Colouring alpha = load_colouring(o.from, g, o.colours, "--from");
  Colouring beta = load_colouring(o.to, g, o.colours, "--to");
  int d = o.degeneracy >= 0 ? o.degeneracy : degeneracy(g);
  ConnectBudget budget{o.budget_factor, o.hard_cap};
  ConnectStats stats;
  Sequence s = connect_colourings(g, d, o.colours, alpha, beta, budget, &stats);
  if (stats.soft_exceeded) {
    std::cerr << "warning: " << s.length() << " moves exceed the soft budget of "
              << stats.soft_bound << "\n";
  }
  finish_sequence(o, g, s, beta);
  write_stats(o, io::to_json(stats));
  return 0;
}

int run_partition(const Options& o) {
  Graph g = load_graph(o);
  const bool corollary = o.kind == "corollary";
  if (!corollary && o.kind != "thomassen") throw UsageError("--kind must be thomassen or corollary");
  VertexPartition p;
  if (!o.partition.empty()) {
    std::istringstream in(io::read_file(o.partition));
    auto parts = io::parse_partition(in, g);
    std::size_t want = corollary ? 3 : 2;
    parts.resize(std::max(parts.size(), want));
    if (parts.size() != want) {
      throw UsageError("expected " + std::to_string(want) + " parts, found " + std::to_string(parts.size()));
    }
    p = corollary ? certify_corollary(g, parts[0], parts[1]) : certify_thomassen(g, parts[0]);
  } else {
    ThomassenConfig cfg;
    cfg.seed = o.seed;
    p = corollary ? corollary_partition(g, cfg) : thomassen_partition(g, cfg);
  }
  certify_partition(g, p);
  emit(o, io::emit_partition(p));
  write_stats(o, io::to_json(p));
  return 0;
}

int run_verify(const Options& o) {
  Graph g = load_graph(o);
  Colouring start = load_colouring(o.from, g, o.colours, "--from");
  if (o.seq.empty()) throw UsageError("--seq is required");
  std::istringstream in(io::read_file(o.seq));
  Sequence s = io::parse_sequence(in, g, start);
  std::optional<Colouring> end;
  if (!o.to.empty()) end = load_colouring(o.to, g, o.colours, "--to");
  VerifyReport r = verify_sequence(g, s, end);
  if (!r.ok) {
    std::cerr << "verification failed";
    if (r.failed_index) std::cerr << " at move " << *r.failed_index;
    std::cerr << ": " << r.reason << "\n";
    return 2;
  }
  std::cout << "ok " << s.length() << " moves\n";
  return 0;
}

int run_oracle(const Options& o) {
  Graph g = load_graph(o);
  if (o.colours < 1) throw UsageError("--colours is required");
  nlohmann::json stats;
  if (!o.from.empty() && !o.to.empty()) {
    Colouring alpha = load_colouring(o.from, g, o.colours, "--from");
    Colouring beta = load_colouring(o.to, g, o.colours, "--to");
    auto path = shortest_sequence(g, o.colours, alpha, beta);
    if (!path) {
      std::cout << "unreachable\n";
      stats["reachable"] = false;
    } else {
      std::cout << path->length() << "\n";
      if (!o.out.empty()) io::write_file(o.out, io::emit_sequence(*path, g.n()));
      stats["reachable"] = true;
      stats["length"] = path->length();
    }
  } else {
    ReconfigurationSummary s = component_and_diameter(g, o.colours);
    std::cout << "proper " << s.proper_colourings << " components " << s.components << " diameter "
              << (s.diameter ? std::to_string(*s.diameter) : "inf") << "\n";
    stats = {{"proper_colourings", s.proper_colourings},
             {"components", s.components},
             {"connected", s.connected},
             {"diameter", s.diameter ? nlohmann::json(*s.diameter) : nlohmann::json(nullptr)}};
  }
  write_stats(o, stats);
  return 0;
}

int run_gen(const Options& o) {
  if (o.family == "colouring") {
    Graph g = load_graph(o);
    if (o.colours < 1) throw UsageError("--colours is required");
    emit(o, io::emit_colouring(random_proper_colouring(g, o.colours, o.seed)));
  } else {
    emit(o, io::emit_graph(generate_family(o.family, o.params, o.seed)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recolouring sequences between colourings of planar graphs"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "Graph file (p edge n m / e u v)");
    sub->add_option("--from", o.from, "Start colouring file");
    sub->add_option("--to", o.to, "Target colouring file");
    sub->add_option("--colours", o.colours, "Palette size K");
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--budget-factor", o.budget_factor, "Soft length budget factor C (C n^2)");
    sub->add_option("--hard-cap", o.hard_cap, "Absolute move limit for connect");
    sub->add_option("--out", o.out, "Output file (default: standard output)");
    sub->add_option("--stats-json", o.stats_json, "Write statistics as JSON");
    sub->add_flag("--check,!--no-check", o.check, "Verify produced sequences (default on)");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"pipeline", "Connect two 7-colourings of a planar graph", run_pipeline},
      {"reduce-degenerate", "Eliminate colour K on a (K-2)-degenerate graph", run_reduce_degenerate},
      {"reduce-mad", "Eliminate colour K on a graph with mad < K-1", run_reduce_mad},
      {"planar65", "Recolour a 6-colouring of a planar graph to a 5-colouring", run_planar65},
      {"connect", "Connect two K-colourings of a d-degenerate graph (K >= 2d+1)", run_connect},
      {"partition", "Compute or certify an independent/degenerate vertex partition", run_partition},
      {"verify", "Replay and check a sequence file", run_verify},
      {"oracle", "Brute-force shortest sequence or reconfiguration-graph summary", run_oracle},
      {"gen", "Generate a graph family or a random proper colouring", run_gen},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    common(sub);
    subs.emplace_back(sub, &c);
  }
  for (auto& [sub, c] : subs) {
    std::string name = c->name;
    if (name == "verify") sub->add_option("--seq", o.seq, "Sequence file");
    if (name == "connect") sub->add_option("--degeneracy", o.degeneracy, "d (default: computed)");
    if (name == "partition") {
      sub->add_option("--partition", o.partition, "Partition file to certify");
      sub->add_option("--kind", o.kind, "thomassen (I, D) or corollary (I1, I2, A)");
    }
    if (name == "gen") {
      sub->add_option("--family", o.family, "path|cycle|grid|wheel|complete|star|octahedron|"
                                            "icosahedron|apollonian|degenerate|colouring")
          ->required();
      sub->add_option("--params", o.params, "Family parameters, comma separated")->delimiter(',');
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    for (auto& [sub, c] : subs) {
      if (sub->parsed()) return c->run(o);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CertificateError& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
