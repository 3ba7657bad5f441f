#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "leafy/digraph.hpp"
#include "leafy/undirected_graph.hpp"

namespace leafy {

/// Seeded source of the few draws the generators need. Built on the raw
/// mt19937_64 stream (whose output the standard pins down) rather than the
/// standard distributions, so instances are identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// True with probability p (clamped to [0, 1]).
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

/// Random rooted DAG: a random permutation fixes the topological order (its
/// first entry is the root), every other vertex gets one arc from a uniformly
/// chosen earlier vertex, and every remaining forward pair becomes an arc with
/// probability extra_arc_probability. n must be at least 1.
Digraph gen_random_rooted_dag(std::size_t n, double extra_arc_probability, std::uint64_t seed);

/// G(n, p) simple graph.
UndirectedGraph gen_random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

/// Trap family on 4k + 4 vertices, k >= 1:
///
///   r -> a_1..a_k, e, s      a_i -> x_i, y_i, z_i      s -> every x, y, z and w
///
/// The a_i precede s in the topological order, so the first greedy pass
/// spends a 3-expansion on each a_i and strands s with the single free
/// out-neighbor w. The result keeps r, every a_i and s internal, 3k + 2
/// leaves, while expanding r and s alone yields 4k + 2. Measured with the
/// exact oracle:
///
///   k      1     2     3     4     5     6     7     8
///   opt    6    10    14    18    22    26    30    34
///   alg    5     8    11    14    17    20    23    26
///   ratio 1.200 1.250 1.273 1.286 1.294 1.300 1.304 1.308
///
/// The ratio (4k+2)/(3k+2) increases with k towards 4/3.
Digraph gen_adversarial_family(std::size_t k);

}  // namespace leafy
