#include <doctest.h>

#include "leafy/errors.hpp"
#include "leafy/exact.hpp"
#include "leafy/generators.hpp"
#include "leafy/reduction.hpp"
#include "support/oracles.hpp"

using namespace leafy;

TEST_CASE("exact on fixed shapes") {
  Digraph one(1, 0, {});
  auto star = oracle::star(6);
  auto path = oracle::path(7);
  auto diamond = oracle::diamond();
  CHECK(exact_max_leaves(one).value == 1);
  CHECK(exact_max_leaves(star).value == 6);
  CHECK(exact_max_leaves(path).value == 1);
  auto r = exact_max_leaves(diamond);
  CHECK(r.value == 2);
  CHECK(is_spanning_arborescence(r.tree));
}

TEST_CASE("exact agrees with plain enumeration") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    auto n = 1 + rng.below(10);
    double p = static_cast<double>(rng.below(70)) / 100.0;
    auto d = gen_random_rooted_dag(n, p, seed);
    CAPTURE(seed);
    auto pruned = exact_max_leaves(d, Objective::kLeafCount, true);
    auto plain = exact_max_leaves(d, Objective::kLeafCount, false);
    REQUIRE(pruned.value == plain.value);
    REQUIRE(pruned.value == oracle::enumerate_max_leaves(d));
    REQUIRE(is_spanning_arborescence(pruned.tree));
    REQUIRE(static_cast<Weight>(leaf_count(pruned.tree)) == pruned.value);
  }
}

TEST_CASE("weighted objective agrees with enumeration") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed + 7);
    auto n = 1 + rng.below(9);
    auto base = gen_random_rooted_dag(n, 0.4, seed);
    std::vector<Weight> w(n);
    for (auto& x : w) x = static_cast<Weight>(rng.below(5));
    std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
    Digraph d(n, base.root(), arcs, w);
    CAPTURE(seed);
    auto r = exact_max_leaves(d, Objective::kLeafWeight);
    REQUIRE(r.value == oracle::enumerate_max_leaves(d, true));
    REQUIRE(leaf_weight(r.tree) == r.value);
    REQUIRE(exact_max_leaves(d, Objective::kLeafWeight, false).value == r.value);
  }
}

TEST_CASE("exact solutions dominate the heuristics") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto d = gen_random_rooted_dag(3 + seed % 10, 0.3, seed);
    CAPTURE(seed);
    auto opt = static_cast<std::size_t>(exact_max_leaves(d).value);
    CHECK(max_leaves(d).report.leaf_count <= opt);
    CHECK(expansion_baseline(d).report.leaf_count <= opt);
  }
}

TEST_CASE("exact guard") {
  auto big = gen_random_rooted_dag(60, 0.5, 1);
  CHECK_FALSE(exact_in_range(big));
  CHECK_THROWS_AS(exact_max_leaves(big), TooLarge);
  CHECK(exact_in_range(oracle::path(200)));
  CHECK(exact_in_range(gen_random_rooted_dag(16, 1.0, 3)));
  CHECK_FALSE(exact_in_range(gen_random_rooted_dag(16, 1.0, 3), false));
}

TEST_CASE("exact solution report") {
  auto d = oracle::diamond();
  auto r = exact_solution(d);
  CHECK(r.report.algorithm == "exact");
  CHECK(r.report.objective == std::string("count"));
  CHECK(r.report.leaf_count == 2);
  CHECK(r.report.certificate_ok);
  CHECK(r.report.phases.back().name == "T");
}
