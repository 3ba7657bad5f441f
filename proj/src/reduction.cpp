#include "leafy/reduction.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "leafy/errors.hpp"

namespace leafy {

Digraph reduce_independent_set(const UndirectedGraph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count);
  const auto m = static_cast<VertexId>(g.edges.size());
  std::vector<Arc> arcs;
  arcs.reserve(n + 2 * m);
  for (VertexId v = 0; v < n; ++v) arcs.push_back({0, v + 1});
  for (VertexId j = 0; j < m; ++j) {
    auto [a, b] = g.edges[j];
    arcs.push_back({a + 1, n + 1 + j});
    arcs.push_back({b + 1, n + 1 + j});
  }
  std::vector<Weight> weights(n + m + 1, 0);
  std::fill(weights.begin() + 1, weights.begin() + 1 + n, 1);
  return Digraph(n + m + 1, 0, std::move(arcs), std::move(weights));
}

std::vector<VertexId> leaves_to_independent_set(const Branching& t) {
  const Digraph& d = t.host();
  auto reject = [](const std::string& why) { throw NotReducedInstance(why); };
  if (d.root() != 0 || !d.has_weights()) reject("host is not a weighted digraph rooted at 0");
  const auto n = static_cast<VertexId>(d.out_degree(0));
  auto root_out = d.out_neighbors(0);
  for (VertexId i = 0; i < n; ++i)
    if (root_out[i] != i + 1) reject("root must point exactly to vertices 1..n");
  if (d.weight(0) != 0) reject("root weight must be 0");
  for (VertexId v = 1; v <= n; ++v)
    if (d.weight(v) != 1 || d.in_degree(v) != 1) reject("vertex " + std::to_string(v) + " is not a graph vertex");
  for (VertexId v = n + 1; v < d.vertex_count(); ++v) {
    auto in = d.in_neighbors(v);
    if (d.weight(v) != 0 || d.out_degree(v) != 0 || in.size() != 2 || in[0] < 1 || in[1] > n)
      reject("vertex " + std::to_string(v) + " is not an edge vertex");
  }
  if (!is_spanning_arborescence(t)) reject("branching is not a spanning arborescence");

  std::vector<VertexId> result;
  for (VertexId v = 1; v <= n; ++v)
    if (t.out_degree(v) == 0) result.push_back(v - 1);
  return result;
}

IndependentSet brute_force_max_independent_set(const UndirectedGraph& g) {
  const auto n = g.vertex_count;
  if (n > kBruteForceIndependentSetMaxVertices)
    throw TooLarge("brute-force independent set limited to " +
                   std::to_string(kBruteForceIndependentSetMaxVertices) + " vertices");
  std::vector<std::uint32_t> neighbors(n, 0);
  for (auto [a, b] : g.edges) {
    neighbors[a] |= 1u << b;
    neighbors[b] |= 1u << a;
  }
  std::uint32_t best = 0;
  int best_size = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best_size) continue;
    bool independent = true;
    for (std::size_t v = 0; v < n && independent; ++v)
      if ((mask >> v & 1u) && (neighbors[v] & mask)) independent = false;
    if (independent) {
      best = mask;
      best_size = size;
    }
  }
  IndependentSet result;
  result.size = static_cast<std::size_t>(best_size);
  for (VertexId v = 0; v < n; ++v)
    if (best >> v & 1u) result.members.push_back(v);
  return result;
}

bool is_independent_set(const UndirectedGraph& g, const std::vector<VertexId>& set) {
  std::vector<bool> in(g.vertex_count, false);
  for (VertexId v : set) {
    if (v >= g.vertex_count) return false;
    in[v] = true;
  }
  return std::none_of(g.edges.begin(), g.edges.end(),
                      [&](const Edge& e) { return in[e.first] && in[e.second]; });
}

}  // namespace leafy
