#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "leafy/exact.hpp"
#include "leafy/solvers.hpp"

namespace leafy::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kUsageError = 2,
  kIoError = 3,
};

inline constexpr const char* kCsvHeader =
    "instance,algorithm,n,leaves,lb_lemma1,ub_lemma2,ub_lemma3,opt,ratio,millis";

/// Names accepted by `solve --algo` and `bench --algos`.
const std::vector<std::string>& algorithm_names();

/// Throws PreconditionViolated for an unknown name.
SolveResult solve_with(const Digraph& d, const std::string& algorithm,
                       Objective objective = Objective::kLeafCount);
SolveResult solve_with(const Digraph&& d, const std::string& algorithm,
                       Objective objective = Objective::kLeafCount) = delete;

/// Entry point of the `leafy` executable. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leafy::cli
