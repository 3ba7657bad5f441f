#pragma once

#include <cstdint>

#include "leafy/branching.hpp"
#include "leafy/rational.hpp"

namespace leafy {

/// (N, k) of one phase; only N - k enters the bounds.
struct PhaseCounts {
  std::int64_t nontrivial_vertices = 0;
  std::int64_t nontrivial_components = 0;

  std::int64_t excess() const { return nontrivial_vertices - nontrivial_components; }
};

PhaseCounts phase_counts(const BranchingStats& s);

// Bounds for the three-phase pipeline (3-expansions, matched 2-expansions,
// attachment). `first` is the maximal 3-branching, `second` the 2-branching
// after the matching phase.

/// ℓ(T) >= (N1-k1)/6 + (N2-k2)/2 + 1.
Rational max_leaves_lower_bound(PhaseCounts first, PhaseCounts second);
/// opt <= N2 - k2 + 1. Also valid for any maximal 2-branching.
Rational expansion_upper_bound(PhaseCounts second);
/// opt <= (N1-k1)/2 + (N2-k2)/2 + 1.
Rational matching_upper_bound(PhaseCounts first, PhaseCounts second);
/// (U3 - 1)/3 + (U2 - 1)/3 + 1, the chain that yields the 2/3 guarantee.
Rational max_leaves_ratio_floor(PhaseCounts first, PhaseCounts second);

/// ℓ(T) >= (N-k)/2 + 1 for a maximal 2-branching completed by attachment.
Rational expansion_lower_bound(PhaseCounts only);

// Bounds for the weighted set-packing pipeline: `first` is the maximal
// 4-branching, `second` after 3-set expansions, `third` after 2-set expansions.

/// ℓ(T) >= (N1-k1)/12 + (N2-k2)/6 + (N3-k3)/2 + 1.
Rational w3dm_lower_bound(PhaseCounts first, PhaseCounts second, PhaseCounts third);
/// opt <= (3-2α)/3 (N1-k1) + α/6 (N2-k2) + α/2 (N3-k3) + 1.
Rational w3dm_upper_bound(PhaseCounts first, PhaseCounts second, PhaseCounts third,
                          Rational alpha);
/// max(4/3, α).
Rational w3dm_ratio(Rational alpha);

}  // namespace leafy
