#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leafy/branching.hpp"
#include "leafy/rational.hpp"
#include "leafy/set_packing.hpp"
#include "leafy/undirected_graph.hpp"

namespace leafy {

/// Snapshot of one intermediate branching.
struct PhaseRecord {
  std::string name;
  BranchingStats stats;
  std::vector<Arc> arcs;
};

/// Phase statistics plus the per-run bound certificate.
///
/// For the matching pipeline: leaf_lower_bound = (N1-k1)/6 + (N2-k2)/2 + 1,
/// expansion_upper_bound = N2-k2+1 and matching_upper_bound =
/// (N1-k1)/2 + (N2-k2)/2 + 1. The baseline fills leaf_lower_bound with
/// (N-k)/2 + 1 and expansion_upper_bound from its single phase. The packing
/// pipeline fills packing_lower_bound / packing_upper_bound instead.
struct SolveReport {
  std::string algorithm;
  std::vector<PhaseRecord> phases;  // last entry is the final arborescence "T"
  std::size_t matching_size = 0;
  std::size_t leaf_count = 0;
  std::optional<Weight> leaf_weight;

  std::optional<Rational> leaf_lower_bound;
  std::optional<Rational> expansion_upper_bound;
  std::optional<Rational> matching_upper_bound;
  std::optional<Rational> packing_lower_bound;
  std::optional<Rational> packing_upper_bound;
  std::optional<Rational> claimed_alpha;
  std::size_t three_set_expansions = 0;
  std::size_t two_set_expansions = 0;
  std::optional<std::string> objective;  // exact runs only: "count" or "weight"

  bool certificate_ok = false;

  const PhaseRecord* phase(const std::string& name) const;
};

struct SolveResult {
  Branching tree;
  SolveReport report;
};

/// Expands, in topological order, every out-degree-0 vertex with at least t
/// parentless out-neighbors by all of them. Requires f to be a
/// (t+1)-branching of d (for t = 1, a branching in which no internal vertex
/// has a parentless out-neighbor). Throws PreconditionViolated.
Branching greedy_expand(const Digraph& d, std::size_t t, const Branching& f);

/// Undirected multigraph of 2-expansions: nodes are the parentless vertices,
/// each edge {a, b} stands for a leaf `candidate` whose parentless
/// out-neighbors are exactly a and b.
struct ExpansionMultigraph {
  struct CandidateEdge {
    VertexId a;
    VertexId b;
    VertexId candidate;
  };
  std::vector<VertexId> node_ids;
  std::vector<CandidateEdge> edges;  // candidates in topological order
};

ExpansionMultigraph expansion_multigraph(const Branching& f);

struct MaxExpandResult {
  Branching branching;
  std::size_t matching_size = 0;
};

/// Applies a maximum set of pairwise compatible 2-expansions, found as a
/// maximum matching of the expansion multigraph. Parallel edges collapse to
/// the candidate with the smallest id. Requires f to be a maximal
/// 3-branching of d. Throws PreconditionViolated.
MaxExpandResult max_expand(const Digraph& d, const Branching& f);

/// Completes f to a spanning arborescence: each remaining parentless
/// non-root vertex, in topological order, gets one arc from an in-neighbor,
/// preferring one that is already internal, then the smallest id.
Branching attach_remaining(const Digraph& d, const Branching& f);

/// 3-expansions, matched 2-expansions, then attachment.
SolveResult max_leaves(const Digraph& d);
SolveResult max_leaves(const Digraph&& d) = delete;

/// Greedy 2-expansions followed by attachment; the 2-approximation baseline.
SolveResult expansion_baseline(const Digraph& d);
SolveResult expansion_baseline(const Digraph&& d) = delete;

/// Set system over leaves with 2 or 3 parentless out-neighbors in f; each
/// 3-set also contributes its three 2-subsets. Weights are size - 1.
SetSystem packing_system(const Branching& f);

/// 4-expansions, then 3- and 2-expansions chosen by `packer`, then attachment.
SolveResult max_leaves_w3dm(const Digraph& d, const SetPacker& packer);
SolveResult max_leaves_w3dm(const Digraph&& d, const SetPacker& packer) = delete;

/// Leaf count, and leaf weight when d is weighted.
std::size_t leaf_count(const Branching& b);
Weight leaf_weight(const Branching& b);

}  // namespace leafy
