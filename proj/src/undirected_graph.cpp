#include "leafy/undirected_graph.hpp"

#include <algorithm>
#include <string>

#include "leafy/errors.hpp"

namespace leafy {

UndirectedGraph UndirectedGraph::make(std::size_t vertex_count, std::vector<Edge> edges) {
  for (auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count)
      throw MalformedInput("edge {" + std::to_string(a) + "," + std::to_string(b) +
                           "} has an endpoint out of range");
    if (a == b) throw MalformedInput("loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw MalformedInput("duplicate edge");
  return {vertex_count, std::move(edges)};
}

std::vector<std::vector<VertexId>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<VertexId>> adj(vertex_count);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace leafy
