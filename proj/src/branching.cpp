#include "leafy/branching.hpp"

#include <algorithm>
#include <string>

#include "leafy/errors.hpp"

namespace leafy {

Branching::Branching(const Digraph& host)
    : host_(&host), parent_(host.vertex_count(), kNone), out_degree_(host.vertex_count(), 0) {}

std::optional<VertexId> Branching::parent(VertexId v) const {
  if (parent_[v] == kNone) return std::nullopt;
  return parent_[v];
}

std::vector<VertexId> Branching::free_out_neighbors(VertexId v) const {
  std::vector<VertexId> result;
  for (VertexId w : host_->out_neighbors(v))
    if (parent_[w] == kNone) result.push_back(w);
  return result;
}

void Branching::expand(VertexId v, std::span<const VertexId> heads) {
  const auto n = host_->vertex_count();
  if (v >= n) throw IllegalExpansion("vertex " + std::to_string(v) + " out of range");
  if (heads.empty()) throw IllegalExpansion("expansion of " + std::to_string(v) + " has no heads");
  if (out_degree_[v] != 0)
    throw IllegalExpansion("vertex " + std::to_string(v) + " already has out-degree " +
                           std::to_string(out_degree_[v]));
  std::vector<VertexId> sorted(heads.begin(), heads.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw IllegalExpansion("expansion of " + std::to_string(v) + " repeats a head");
  for (VertexId h : heads) {
    if (!host_->has_arc(v, h))
      throw IllegalExpansion("(" + std::to_string(v) + "," + std::to_string(h) +
                             ") is not an arc of the host");
    if (parent_[h] != kNone)
      throw IllegalExpansion("head " + std::to_string(h) + " already has parent " +
                             std::to_string(parent_[h]));
  }
  for (VertexId h : heads) {
    parent_[h] = v;
    arcs_.push_back({v, h});
  }
  out_degree_[v] = heads.size();
}

void Branching::attach(VertexId parent, VertexId child) {
  if (!host_->has_arc(parent, child))
    throw IllegalExpansion("(" + std::to_string(parent) + "," + std::to_string(child) +
                           ") is not an arc of the host");
  if (parent_[child] != kNone)
    throw IllegalExpansion("vertex " + std::to_string(child) + " already has parent " +
                           std::to_string(parent_[child]));
  parent_[child] = parent;
  ++out_degree_[parent];
  arcs_.push_back({parent, child});
}

Branching empty_branching(const Digraph& d) { return Branching(d); }

Branching add_expansion(Branching b, VertexId v, std::span<const VertexId> heads) {
  b.expand(v, heads);
  return b;
}

BranchingStats stats(const Branching& b) {
  const Digraph& d = b.host();
  const auto n = d.vertex_count();
  BranchingStats s;
  s.n = n;

  // Tree root of each vertex, resolved in topological order so parents come first.
  std::vector<VertexId> tree_root(n);
  std::vector<std::size_t> tree_size(n, 0);
  std::vector<std::size_t> children(n, 0);
  std::size_t parented = 0;
  for (VertexId v : d.topological_order()) {
    auto p = b.parent(v);
    if (p) {
      ++parented;
      ++children[*p];
      tree_root[v] = tree_root[*p];
    } else {
      tree_root[v] = v;
    }
    ++tree_size[tree_root[v]];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (children[v] != b.out_degree(v))
      throw PreconditionViolated("out-degree bookkeeping of vertex " + std::to_string(v) +
                                 " disagrees with the parent array");
    if (children[v] == 0) ++s.leaves;
    if (tree_root[v] == v && tree_size[v] >= 2) {
      ++s.nontrivial_components;
      s.nontrivial_vertices += tree_size[v];
    }
  }
  if (parented != b.arcs().size())
    throw PreconditionViolated("arc list size disagrees with the parent array");
  s.arcs = s.nontrivial_vertices - s.nontrivial_components;
  s.components = n - s.nontrivial_vertices + s.nontrivial_components;
  return s;
}

bool is_t_branching(const Branching& b, std::size_t t) {
  for (VertexId v = 0; v < b.host().vertex_count(); ++v) {
    auto deg = b.out_degree(v);
    if (deg >= 1 && deg < t) return false;
  }
  return true;
}

bool is_maximal(const Branching& b, std::size_t t) {
  if (!is_t_branching(b, t))
    throw NotTBranching("branching is not a " + std::to_string(t) + "-branching");
  for (VertexId v = 0; v < b.host().vertex_count(); ++v)
    if (b.out_degree(v) == 0 && b.free_out_neighbors(v).size() >= t) return false;
  return true;
}

bool is_spanning_arborescence(const Branching& b) {
  const Digraph& d = b.host();
  if (b.arcs().size() + 1 != d.vertex_count()) return false;
  if (b.has_parent(d.root())) return false;
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (v != d.root() && !b.has_parent(v)) return false;
  // Host is acyclic, so following parents always terminates at a parentless
  // vertex, which can only be the root here.
  return true;
}

bool internal_coverage_holds(const Branching& b) {
  for (VertexId v = 0; v < b.host().vertex_count(); ++v)
    if (b.out_degree(v) > 0 && !b.free_out_neighbors(v).empty()) return false;
  return true;
}

}  // namespace leafy
