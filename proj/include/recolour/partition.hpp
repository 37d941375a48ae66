#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recolour/graph.hpp"
#include "recolour/ordering.hpp"

namespace recolour {

enum class PartKind { kIndependent, kDegenerate };

/// One part of a certified partition. Degenerate parts carry an ordering of
/// the induced subgraph whose width is at most `degeneracy`.
struct PartitionCertificate {
  VertexSet part;
  PartKind kind = PartKind::kIndependent;
  int degeneracy = 0;
  DegeneracyOrder witness;
};

struct VertexPartition {
  std::vector<PartitionCertificate> parts;
  /// How the partition was found ("bipartite", "degenerate", "randomized",
  /// "backtracking", "supplied", ...).
  std::string strategy;
};

/// Re-checks every part from scratch: disjointness and coverage of V(g),
/// independence by edge scan, and degeneracy by recomputing the peel width
/// of each induced subgraph. Throws CertificateError on failure.
void certify_partition(const Graph& g, const VertexPartition& p);

/// Independent I and (k-1)-degenerate F for a k-degenerate graph: scan the
/// degeneracy ordering and take every vertex with no earlier neighbour in I.
/// Throws NotDegenerateEnough if the degeneracy exceeds k.
VertexPartition mihok_wood_partition(const Graph& g, int k);

struct ThomassenConfig {
  std::uint64_t seed = 1;
  int random_attempts = 256;
  std::uint64_t node_cap = 5'000'000;
  bool allow_fast_paths = true;
  bool allow_random = true;
};

/// Independent I and 3-degenerate D for a planar graph. Tries, in order: a
/// bipartition; mihok_wood_partition when the degeneracy is at most 4; seeded
/// random maximal independent sets biased towards high degree; exhaustive
/// backtracking with 4-core pruning. Throws SearchExhausted when every stage
/// fails within its caps.
VertexPartition thomassen_partition(const Graph& g, const ThomassenConfig& cfg = {});

/// Certifies a supplied (I, D) partition and attaches witnesses.
VertexPartition certify_thomassen(const Graph& g, const VertexSet& independent);

/// I1, I2 independent and A 2-degenerate: thomassen_partition followed by
/// mihok_wood_partition(G[D], 3).
VertexPartition corollary_partition(const Graph& g, const ThomassenConfig& cfg = {});

/// Certifies a supplied (I1, I2, A) partition and attaches witnesses.
VertexPartition certify_corollary(const Graph& g, const VertexSet& first, const VertexSet& second);

}  // namespace recolour
