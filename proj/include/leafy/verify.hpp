#pragma once

#include <string>
#include <vector>

#include "leafy/instance_io.hpp"

namespace leafy {

struct VerifyOutcome {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Re-checks a solution against its instance without trusting the report:
/// rebuilds the arborescence from the parent array and every phase from its
/// recorded arcs, recomputes stats, bounds and certificate inequalities, and
/// compares them with what the report claims.
VerifyOutcome verify_solution(const Digraph& d, const SolutionFile& solution);

}  // namespace leafy
