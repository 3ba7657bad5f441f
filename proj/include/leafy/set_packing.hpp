#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "leafy/digraph.hpp"
#include "leafy/rational.hpp"

namespace leafy {

/// One candidate expansion: the vertex `candidate` would adopt `members`.
struct WeightedSet {
  std::vector<VertexId> members;  // sorted, 2 or 3 entries
  Weight weight = 0;              // members.size() - 1
  VertexId candidate = 0;

  friend bool operator==(const WeightedSet&, const WeightedSet&) = default;
};

struct SetSystem {
  std::vector<VertexId> elements;
  std::vector<WeightedSet> sets;
};

/// Canonical order: weight descending, then candidate ascending, then members
/// lexicographically ascending.
bool precedes(const WeightedSet& a, const WeightedSet& b);

Weight total_weight(const std::vector<WeightedSet>& selection);
bool pairwise_disjoint(const std::vector<WeightedSet>& selection);

/// Scans sets in canonical order and keeps each one disjoint from everything
/// kept so far. A 3-approximation for sets of size at most 3.
std::vector<WeightedSet> pack_greedy(const SetSystem& s);

inline constexpr std::size_t kExactPackingMaxSets = 40;

/// Maximum-weight disjoint subfamily by branch and bound. Among optimal
/// packings it prefers more sets, then the one whose inclusion pattern comes
/// first in canonical order. Throws TooLarge above kExactPackingMaxSets sets.
std::vector<WeightedSet> pack_exact(const SetSystem& s);

/// A packing routine together with the approximation factor it is claimed to
/// achieve; the factor feeds the opt upper bound of the packing pipeline.
struct SetPacker {
  std::string name;
  Rational claimed_alpha;
  std::function<std::vector<WeightedSet>(const SetSystem&)> pack;
};

SetPacker greedy_packer();  // α = 3
SetPacker exact_packer();   // α = 1

}  // namespace leafy
