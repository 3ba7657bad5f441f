#pragma once

#include <cstddef>
#include <vector>

#include "leafy/branching.hpp"
#include "leafy/undirected_graph.hpp"

namespace leafy {

/// Rooted DAG whose maximum leaf weight equals the independence number of g.
/// Vertex 0 is the root, 1..n stand for the vertices of g and n+1..n+m for
/// its edges (in g.edges order). The root points to every vertex-vertex and
/// each edge-vertex has the two endpoints of its edge as in-neighbors.
/// Weights: 1 on vertex-vertices, 0 elsewhere. The output has n+m+1
/// vertices, n+2m arcs and maximum in-degree at most 2.
Digraph reduce_independent_set(const UndirectedGraph& g);

/// Vertices of the source graph that are leaves of t. Throws
/// NotReducedInstance if t's host does not have the shape produced by
/// reduce_independent_set, or if t is not a spanning arborescence.
std::vector<VertexId> leaves_to_independent_set(const Branching& t);

struct IndependentSet {
  std::size_t size = 0;
  std::vector<VertexId> members;
};

inline constexpr std::size_t kBruteForceIndependentSetMaxVertices = 20;

/// Exhaustive maximum independent set. Throws TooLarge above 20 vertices.
IndependentSet brute_force_max_independent_set(const UndirectedGraph& g);

bool is_independent_set(const UndirectedGraph& g, const std::vector<VertexId>& set);

}  // namespace leafy
