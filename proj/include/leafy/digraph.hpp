#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace leafy {

using VertexId = std::uint32_t;
using Weight = std::int64_t;

struct Arc {
  VertexId tail;
  VertexId head;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable rooted DAG. Construction validates range, self-loops, duplicate
/// arcs, acyclicity and reachability from the root, in that order; the first
/// failing check decides the error type.
///
/// Arcs are kept sorted lexicographically and adjacency lists ascending, so two
/// digraphs built from the same arc set compare equal regardless of input order.
class Digraph {
 public:
  /// Throws MalformedInput, CycleDetected or NotRooted.
  Digraph(std::size_t vertex_count, VertexId root, std::vector<Arc> arcs,
          std::optional<std::vector<Weight>> weights = std::nullopt);

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  VertexId root() const { return root_; }

  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const VertexId> out_neighbors(VertexId v) const { return out_[v]; }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_[v]; }
  std::size_t out_degree(VertexId v) const { return out_[v].size(); }
  std::size_t in_degree(VertexId v) const { return in_[v].size(); }
  bool has_arc(VertexId tail, VertexId head) const;

  bool has_weights() const { return weights_.has_value(); }
  const std::optional<std::vector<Weight>>& weights() const { return weights_; }
  /// 1 for every vertex when the digraph is unweighted.
  Weight weight(VertexId v) const { return weights_ ? (*weights_)[v] : 1; }

  /// Topological order starting at the root; among ready vertices the
  /// smallest id goes first.
  std::span<const VertexId> topological_order() const { return topo_; }
  /// Inverse of topological_order().
  std::size_t topological_position(VertexId v) const { return topo_pos_[v]; }

  std::size_t max_in_degree() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.root_ == b.root_ && a.out_.size() == b.out_.size() && a.arcs_ == b.arcs_ &&
           a.weights_ == b.weights_;
  }

 private:
  VertexId root_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::optional<std::vector<Weight>> weights_;
  std::vector<VertexId> topo_;
  std::vector<std::size_t> topo_pos_;
};

/// Free-function spelling of the constructor.
Digraph build_digraph(std::size_t vertex_count, VertexId root, std::vector<Arc> arcs,
                      std::optional<std::vector<Weight>> weights = std::nullopt);

inline std::vector<VertexId> topological_order(const Digraph& d) {
  auto order = d.topological_order();
  return {order.begin(), order.end()};
}

}  // namespace leafy
