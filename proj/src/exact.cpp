#include "leafy/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "leafy/errors.hpp"

namespace leafy {

namespace {

constexpr double kSearchLimit = 1e8;
constexpr std::size_t kSmallGraph = 16;

// log10 of the number of unpruned parent functions.
double log_parent_functions(const Digraph& d) {
  double total = 0;
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (d.in_degree(v) > 1) total += std::log10(static_cast<double>(d.in_degree(v)));
  return total;
}

// With the internal-parent shortcut, every branching step makes a new vertex
// internal, so a root-to-leaf path of the search tree branches at most once
// per non-sink vertex.
double log_pruned_leaves(const Digraph& d) {
  std::size_t non_sinks = 0;
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (d.out_degree(v) > 0) ++non_sinks;
  auto branching = static_cast<double>(std::max<std::size_t>(d.max_in_degree(), 1));
  return static_cast<double>(non_sinks) * std::log10(branching);
}

class ParentSearch {
 public:
  ParentSearch(const Digraph& d, Objective objective, bool prune)
      : d_(d), prune_(prune), children_(d.vertex_count(), 0), choice_(d.vertex_count()),
        weight_(d.vertex_count()) {
    for (VertexId v : d.topological_order())
      if (v != d.root()) order_.push_back(v);
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
      weight_[v] = objective == Objective::kLeafWeight ? d.weight(v) : 1;
      live_weight_ += weight_[v];
    }
  }

  ExactResult run() {
    search(0);
    Branching tree(d_);
    for (VertexId v : order_) tree.attach(best_choice_[v], v);
    return {best_, std::move(tree)};
  }

 private:
  void assign(VertexId v, VertexId parent) {
    choice_[v] = parent;
    if (children_[parent]++ == 0) live_weight_ -= weight_[parent];
  }

  void unassign(VertexId parent) {
    if (--children_[parent] == 0) live_weight_ += weight_[parent];
  }

  void search(std::size_t i) {
    // live_weight_ only shrinks as parents are chosen, so it bounds every completion.
    if (prune_ && live_weight_ <= best_) return;
    if (i == order_.size()) {
      if (live_weight_ > best_) {
        best_ = live_weight_;
        best_choice_ = choice_;
      }
      return;
    }
    VertexId v = order_[i];
    auto in = d_.in_neighbors(v);
    if (prune_) {
      auto internal = std::find_if(in.begin(), in.end(),
                                   [&](VertexId u) { return children_[u] > 0; });
      if (internal != in.end()) {
        // Dominates every live alternative: the internal set does not grow.
        assign(v, *internal);
        search(i + 1);
        unassign(*internal);
        return;
      }
    }
    for (VertexId u : in) {
      assign(v, u);
      search(i + 1);
      unassign(u);
    }
  }

  const Digraph& d_;
  bool prune_;
  std::vector<VertexId> order_;
  std::vector<std::size_t> children_;
  std::vector<VertexId> choice_, best_choice_;
  std::vector<Weight> weight_;
  Weight live_weight_ = 0;
  Weight best_ = -1;
};

}  // namespace

bool exact_in_range(const Digraph& d, bool prune) {
  const double limit = std::log10(kSearchLimit);
  if (log_parent_functions(d) <= limit) return true;
  if (!prune) return false;
  return d.vertex_count() <= kSmallGraph || log_pruned_leaves(d) <= limit;
}

ExactResult exact_max_leaves(const Digraph& d, Objective objective, bool prune) {
  if (!exact_in_range(d, prune))
    throw TooLarge("exact search refused: " + std::to_string(d.vertex_count()) +
                   " vertices, log10(parent functions) = " +
                   std::to_string(log_parent_functions(d)));
  return ParentSearch(d, objective, prune).run();
}

SolveResult exact_solution(const Digraph& d, Objective objective) {
  auto [value, tree] = exact_max_leaves(d, objective);
  SolveReport report;
  report.algorithm = "exact";
  report.objective = objective == Objective::kLeafWeight ? "weight" : "count";
  report.phases.push_back({"T", stats(tree), {tree.arcs().begin(), tree.arcs().end()}});
  report.leaf_count = leaf_count(tree);
  if (d.has_weights()) report.leaf_weight = leaf_weight(tree);
  report.certificate_ok = true;
  return {std::move(tree), std::move(report)};
}

}  // namespace leafy
