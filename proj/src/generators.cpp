#include "leafy/generators.hpp"

#include <limits>
#include <numeric>

#include "leafy/errors.hpp"

namespace leafy {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling against the largest multiple of bound.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

bool Rng::chance(double p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

Digraph gen_random_rooted_dag(std::size_t n, double extra_arc_probability, std::uint64_t seed) {
  if (n == 0) throw MalformedInput("random DAG needs at least one vertex");
  Rng rng(seed);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mandatory = rng.below(i);
    arcs.push_back({order[mandatory], order[i]});
    for (std::size_t j = 0; j < i; ++j)
      if (j != mandatory && rng.chance(extra_arc_probability))
        arcs.push_back({order[j], order[i]});
  }
  return Digraph(n, order[0], std::move(arcs));
}

UndirectedGraph gen_random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (rng.chance(edge_probability)) edges.emplace_back(a, b);
  return UndirectedGraph::make(n, std::move(edges));
}

Digraph gen_adversarial_family(std::size_t k) {
  if (k == 0) throw MalformedInput("adversarial family needs k >= 1");
  const auto kk = static_cast<VertexId>(k);
  const VertexId root = 0, extra = kk + 1, hub = kk + 2, tail = 4 * kk + 3;
  auto a = [](VertexId i) { return i + 1; };
  auto x = [kk](VertexId i, VertexId j) { return kk + 3 + 3 * i + j; };

  std::vector<Arc> arcs;
  for (VertexId i = 0; i < kk; ++i) arcs.push_back({root, a(i)});
  arcs.push_back({root, extra});
  arcs.push_back({root, hub});
  for (VertexId i = 0; i < kk; ++i) {
    for (VertexId j = 0; j < 3; ++j) {
      arcs.push_back({a(i), x(i, j)});
      arcs.push_back({hub, x(i, j)});
    }
  }
  arcs.push_back({hub, tail});
  return Digraph(4 * k + 4, root, std::move(arcs));
}

}  // namespace leafy
