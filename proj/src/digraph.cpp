#include "leafy/digraph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "leafy/errors.hpp"

namespace leafy {

namespace {

std::string arc_string(const Arc& a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

}  // namespace

Digraph::Digraph(std::size_t vertex_count, VertexId root, std::vector<Arc> arcs,
                 std::optional<std::vector<Weight>> weights)
    : root_(root), arcs_(std::move(arcs)), out_(vertex_count), in_(vertex_count),
      weights_(std::move(weights)) {
  if (vertex_count == 0) throw MalformedInput("digraph must have at least one vertex");
  if (root >= vertex_count)
    throw MalformedInput("root " + std::to_string(root) + " out of range");
  if (weights_) {
    if (weights_->size() != vertex_count)
      throw MalformedInput("weights has " + std::to_string(weights_->size()) +
                           " entries, expected " + std::to_string(vertex_count));
    for (std::size_t v = 0; v < vertex_count; ++v)
      if ((*weights_)[v] < 0)
        throw MalformedInput("negative weight on vertex " + std::to_string(v));
  }
  for (const Arc& a : arcs_) {
    if (a.tail >= vertex_count || a.head >= vertex_count)
      throw MalformedInput("arc " + arc_string(a) + " has an endpoint out of range");
    if (a.tail == a.head) throw MalformedInput("self-loop " + arc_string(a));
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (auto dup = std::adjacent_find(arcs_.begin(), arcs_.end()); dup != arcs_.end())
    throw MalformedInput("duplicate arc " + arc_string(*dup));

  for (const Arc& a : arcs_) {
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
  }
  // arcs_ is sorted by tail then head, so out_ lists are already ascending.
  for (auto& list : in_) std::sort(list.begin(), list.end());

  // Kahn's algorithm, smallest ready id first.
  std::vector<std::size_t> remaining(vertex_count);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < vertex_count; ++v) {
    remaining[v] = in_[v].size();
    if (remaining[v] == 0) ready.push(v);
  }
  topo_.reserve(vertex_count);
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (VertexId w : out_[v])
      if (--remaining[w] == 0) ready.push(w);
  }
  if (topo_.size() != vertex_count) throw CycleDetected("digraph contains a directed cycle");

  // In a DAG every vertex is reachable from the root iff the root is the only source.
  for (VertexId v = 0; v < vertex_count; ++v)
    if (v != root_ && in_[v].empty())
      throw NotRooted("vertex " + std::to_string(v) + " is not reachable from root " +
                      std::to_string(root_));
  if (!in_[root_].empty()) throw NotRooted("root " + std::to_string(root_) + " has in-arcs");

  topo_pos_.resize(vertex_count);
  for (std::size_t i = 0; i < topo_.size(); ++i) topo_pos_[topo_[i]] = i;
}

bool Digraph::has_arc(VertexId tail, VertexId head) const {
  if (tail >= out_.size()) return false;
  return std::binary_search(out_[tail].begin(), out_[tail].end(), head);
}

std::size_t Digraph::max_in_degree() const {
  std::size_t best = 0;
  for (const auto& list : in_) best = std::max(best, list.size());
  return best;
}

Digraph build_digraph(std::size_t vertex_count, VertexId root, std::vector<Arc> arcs,
                      std::optional<std::vector<Weight>> weights) {
  return Digraph(vertex_count, root, std::move(arcs), std::move(weights));
}

}  // namespace leafy
