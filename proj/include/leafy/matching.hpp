#pragma once

#include <cstddef>
#include <vector>

#include "leafy/undirected_graph.hpp"

namespace leafy {

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// algorithm). Vertices and adjacency lists are scanned in ascending id, so
/// the result is a deterministic function of the input. Edges are returned
/// sorted, each with first < second.
std::vector<Edge> max_matching(const UndirectedGraph& g);

inline constexpr std::size_t kBruteForceMatchingMaxEdges = 25;

/// Exhaustive search over edge subsets. Throws TooLarge above
/// kBruteForceMatchingMaxEdges edges.
std::vector<Edge> brute_force_matching(const UndirectedGraph& g);

/// No two edges share an endpoint and every edge belongs to g.
bool is_matching(const UndirectedGraph& g, const std::vector<Edge>& m);

}  // namespace leafy
