#include "recolour/pipeline.hpp"

#include <cmath>
#include <future>

#include "recolour/errors.hpp"

namespace recolour {

namespace {

struct Reduction {
  Sequence mad;
  Sequence planar;
  MadStats mad_stats;
  Planar65Stats planar_stats;
};

Reduction reduce_to_five(const Graph& g, const Colouring& c) {
  Reduction r;
  r.mad = reduce_one_colour_mad(g, 5, c, &r.mad_stats);
  r.planar = reduce_planar_6_to_5(g, r.mad.end(), &r.planar_stats);
  return r;
}

Sequence pin(const Graph& g, const Colouring& gamma, const VertexPartition& p) {
  Replay replay(g, gamma);
  for (Vertex v : p.parts[0].part) replay.recolour(v, 7);
  for (Vertex v : p.parts[1].part) replay.recolour(v, 6);
  return replay.sequence();
}

void check_endpoint(const Graph& g, const Colouring& c, const char* name) {
  if (c.palette() != kPipelinePalette) {
    throw PaletteTooSmall(std::string(name) + " must have palette 7");
  }
  if (!c.covers(g)) throw UsageError(std::string(name) + " does not cover the graph");
  if (auto bad = monochromatic_edge(g, c)) {
    throw ImproperResult(std::string(name) + " is improper at edge " + std::to_string(bad->first) +
                         "-" + std::to_string(bad->second));
  }
}

}  // namespace

PipelineResult seven_colour_path(const Graph& g, const Colouring& alpha, const Colouring& beta,
                                 const PipelineConfig& cfg) {
  check_endpoint(g, alpha, "start colouring");
  check_endpoint(g, beta, "target colouring");

  Reduction a, b;
  if (cfg.parallel) {
    auto beta_side = std::async(std::launch::async, [&] { return reduce_to_five(g, beta); });
    a = reduce_to_five(g, alpha);
    b = beta_side.get();
  } else {
    a = reduce_to_five(g, alpha);
    b = reduce_to_five(g, beta);
  }
  const Colouring gamma1 = a.planar.end();
  const Colouring gamma2 = b.planar.end();

  PipelineResult out;
  out.partition = corollary_partition(g, cfg.partition);
  Sequence pin_alpha = pin(g, gamma1, out.partition);
  Sequence pin_beta = pin(g, gamma2, out.partition);

  const VertexSet& rest = out.partition.parts[2].part;
  Graph h = induced_subgraph(g, rest);
  Sequence connected = connect_colourings(h, 2, 5, gamma1.restricted_to(rest).with_palette(5),
                                          gamma2.restricted_to(rest).with_palette(5), cfg.budget,
                                          &out.connect_stats);
  Replay lifted(g, pin_alpha.end());
  for (const Move& m : connected.moves) lifted.apply(m);

  PipelinePhases& ph = out.phases;
  ph.mad_alpha = a.mad;
  ph.planar65_alpha = a.planar;
  ph.pin_alpha = pin_alpha;
  ph.connect = lifted.sequence();
  ph.pin_beta = reverse(pin_beta);
  ph.planar65_beta = reverse(b.planar);
  ph.mad_beta = reverse(b.mad);

  Sequence whole = ph.mad_alpha;
  for (const Sequence* s : {&ph.planar65_alpha, &ph.pin_alpha, &ph.connect, &ph.pin_beta,
                            &ph.planar65_beta, &ph.mad_beta}) {
    whole = concat(whole, *s);
  }
  const std::size_t raw = whole.length();
  out.sequence = cfg.coalesce ? coalesce(whole) : whole;

  VerifyReport check = verify_sequence(g, out.sequence, beta);
  if (!check.ok) throw CertificateError("assembled sequence failed verification: " + check.reason);

  PipelineReport& r = out.report;
  r.n = g.n();
  r.mad_alpha = ph.mad_alpha.length();
  r.planar65_alpha = ph.planar65_alpha.length();
  r.pin_alpha = ph.pin_alpha.length();
  r.connect = ph.connect.length();
  r.pin_beta = ph.pin_beta.length();
  r.planar65_beta = ph.planar65_beta.length();
  r.mad_beta = ph.mad_beta.length();
  r.coalesced = raw - out.sequence.length();
  r.total = out.sequence.length();
  if (r.total > 0 && r.n > 0) {
    r.fitted_exponent = std::log2(static_cast<double>(r.total)) / std::sqrt(static_cast<double>(r.n));
  }
  r.partition_strategy = out.partition.strategy;
  r.mad_asserts = a.mad_stats.asserts_checked + b.mad_stats.asserts_checked;
  r.planar65_levels = a.planar_stats.levels.size() + b.planar_stats.levels.size();
  r.kempe_swaps = a.planar_stats.component_swaps + b.planar_stats.component_swaps;
  r.connect_soft_exceeded = out.connect_stats.soft_exceeded;
  r.connect_soft_bound = out.connect_stats.soft_bound;

  out.mad_alpha_stats = std::move(a.mad_stats);
  out.mad_beta_stats = std::move(b.mad_stats);
  out.planar_alpha_stats = std::move(a.planar_stats);
  out.planar_beta_stats = std::move(b.planar_stats);
  return out;
}

}  // namespace recolour
