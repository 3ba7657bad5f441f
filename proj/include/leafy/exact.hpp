#pragma once

#include "leafy/branching.hpp"
#include "leafy/solvers.hpp"

namespace leafy {

enum class Objective { kLeafCount, kLeafWeight };

struct ExactResult {
  Weight value;
  Branching tree;
};

/// Whether exact_max_leaves accepts d in the given mode.
bool exact_in_range(const Digraph& d, bool prune = true);

/// Maximum leaf count (or leaf weight) over all spanning arborescences, found
/// by choosing a parent for every non-root vertex in topological order. With
/// `prune`, branches whose live weight cannot beat the incumbent are cut and
/// a vertex with an already-internal in-neighbor takes that one without
/// branching; neither changes the returned value. Throws TooLarge outside
/// exact_in_range.
ExactResult exact_max_leaves(const Digraph& d, Objective objective = Objective::kLeafCount,
                             bool prune = true);
ExactResult exact_max_leaves(const Digraph&& d, Objective objective = Objective::kLeafCount,
                             bool prune = true) = delete;

/// exact_max_leaves packaged as a solver run: a single "T" phase, no bounds.
SolveResult exact_solution(const Digraph& d, Objective objective = Objective::kLeafCount);
SolveResult exact_solution(const Digraph&& d, Objective objective = Objective::kLeafCount) = delete;

}  // namespace leafy
