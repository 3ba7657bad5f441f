#include "leafy/certificates.hpp"

#include <algorithm>

namespace leafy {

PhaseCounts phase_counts(const BranchingStats& s) {
  return {static_cast<std::int64_t>(s.nontrivial_vertices),
          static_cast<std::int64_t>(s.nontrivial_components)};
}

Rational max_leaves_lower_bound(PhaseCounts first, PhaseCounts second) {
  return Rational(first.excess(), 6) + Rational(second.excess(), 2) + 1;
}

Rational expansion_upper_bound(PhaseCounts second) { return Rational(second.excess() + 1); }

Rational matching_upper_bound(PhaseCounts first, PhaseCounts second) {
  return Rational(first.excess(), 2) + Rational(second.excess(), 2) + 1;
}

Rational max_leaves_ratio_floor(PhaseCounts first, PhaseCounts second) {
  return (matching_upper_bound(first, second) - 1) / 3 +
         (expansion_upper_bound(second) - 1) / 3 + 1;
}

Rational expansion_lower_bound(PhaseCounts only) { return Rational(only.excess(), 2) + 1; }

Rational w3dm_lower_bound(PhaseCounts first, PhaseCounts second, PhaseCounts third) {
  return Rational(first.excess(), 12) + Rational(second.excess(), 6) +
         Rational(third.excess(), 2) + 1;
}

Rational w3dm_upper_bound(PhaseCounts first, PhaseCounts second, PhaseCounts third,
                          Rational alpha) {
  return (3 - 2 * alpha) / 3 * first.excess() + alpha / 6 * second.excess() +
         alpha / 2 * third.excess() + 1;
}

Rational w3dm_ratio(Rational alpha) { return std::max(Rational(4, 3), alpha); }

}  // namespace leafy
