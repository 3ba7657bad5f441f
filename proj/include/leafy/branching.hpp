#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "leafy/digraph.hpp"

namespace leafy {

/// Counters of a branching. `nontrivial_vertices` and `nontrivial_components`
/// count only components with at least one arc; isolated vertices are leaves.
struct BranchingStats {
  std::size_t n = 0;
  std::size_t nontrivial_vertices = 0;    // N
  std::size_t nontrivial_components = 0;  // k
  std::size_t leaves = 0;
  std::size_t components = 0;  // n - N + k
  std::size_t arcs = 0;        // N - k

  friend bool operator==(const BranchingStats&, const BranchingStats&) = default;
};

/// A forest of arborescences inside a host Digraph. Holds a pointer to the
/// host; the host must outlive the branching.
class Branching {
 public:
  /// The spanning branching with no arcs.
  explicit Branching(const Digraph& host);
  explicit Branching(const Digraph&& host) = delete;  // keeps a pointer to host

  const Digraph& host() const { return *host_; }

  std::optional<VertexId> parent(VertexId v) const;
  std::size_t out_degree(VertexId v) const { return out_degree_[v]; }
  bool has_parent(VertexId v) const { return parent_[v] != kNone; }
  /// Arcs in insertion order.
  std::span<const Arc> arcs() const { return arcs_; }

  /// Out-neighbors of v in the host that have no parent yet (the set U_v).
  std::vector<VertexId> free_out_neighbors(VertexId v) const;

  /// Adds the arcs (v, h) for every h in heads. Requires v to have out-degree
  /// 0, every (v, h) to be a host arc, every h to be parentless, and heads to
  /// be nonempty and duplicate-free. Throws IllegalExpansion otherwise and
  /// leaves the branching unchanged.
  void expand(VertexId v, std::span<const VertexId> heads);

  /// Adds a single arc (parent, child) without the out-degree-0 requirement on
  /// the tail. Used by the final attachment phase and when replaying recorded
  /// arc lists. Throws IllegalExpansion.
  void attach(VertexId parent, VertexId child);

  friend bool operator==(const Branching& a, const Branching& b) {
    return a.host_ == b.host_ && a.parent_ == b.parent_;
  }

 private:
  static constexpr VertexId kNone = static_cast<VertexId>(-1);

  const Digraph* host_;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> out_degree_;
  std::vector<Arc> arcs_;
};

Branching empty_branching(const Digraph& d);
Branching empty_branching(const Digraph&& d) = delete;

/// Copying spelling of Branching::expand.
Branching add_expansion(Branching b, VertexId v, std::span<const VertexId> heads);

/// Recomputes every counter from the parent array. Throws
/// PreconditionViolated if the internal bookkeeping disagrees with it.
BranchingStats stats(const Branching& b);

/// Every vertex with out-degree >= 1 has out-degree >= t.
bool is_t_branching(const Branching& b, std::size_t t);

/// Every out-degree-0 vertex has fewer than t parentless out-neighbors.
/// Throws NotTBranching if b is not a t-branching.
bool is_maximal(const Branching& b, std::size_t t);

bool is_spanning_arborescence(const Branching& b);

/// No internal vertex has a parentless out-neighbor.
bool internal_coverage_holds(const Branching& b);

}  // namespace leafy
