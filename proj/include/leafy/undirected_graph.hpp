#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "leafy/digraph.hpp"

namespace leafy {

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph on 0..vertex_count-1.
struct UndirectedGraph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  /// Normalizes endpoint order and sorts; throws MalformedInput on loops,
  /// duplicates or out-of-range endpoints.
  static UndirectedGraph make(std::size_t vertex_count, std::vector<Edge> edges);

  std::vector<std::vector<VertexId>> adjacency() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;
};

}  // namespace leafy
