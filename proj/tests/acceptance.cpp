// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "leafy/certificates.hpp"
#include "leafy/cli.hpp"
#include "leafy/exact.hpp"
#include "leafy/generators.hpp"
#include "leafy/matching.hpp"
#include "leafy/reduction.hpp"
#include "leafy/solvers.hpp"
#include "support/oracles.hpp"

using namespace leafy;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Rational whole(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

PhaseCounts counts_of(const SolveReport& r, const std::string& phase) {
  return phase_counts(r.phase(phase)->stats);
}

struct CorpusEntry {
  std::uint64_t seed;
  Digraph d;
  Weight opt;
};

// 2000 random rooted DAGs, 3 <= n <= 12, with their exact optimum.
const std::vector<CorpusEntry>& ratio_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> c;
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
      Rng rng(seed);
      auto n = 3 + rng.below(10);
      double p = static_cast<double>(rng.below(90)) / 100.0;
      auto d = gen_random_rooted_dag(n, p, seed);
      c.push_back({seed, d, 0});
    }
    for (auto& e : c) e.opt = exact_max_leaves(e.d).value;
    return c;
  }();
  return corpus;
}

std::string seed_tag(std::uint64_t seed) { return "seed " + std::to_string(seed); }

// Recomputes the bound chain from the recorded phases instead of trusting the flag.
void check_max_leaves_certificate(const Digraph& d, const std::string& tag, Outcome& o) {
  auto r = max_leaves(d);
  if (!is_spanning_arborescence(r.tree)) return o.fail(tag + ": not a spanning arborescence");
  auto c1 = counts_of(r.report, "F1");
  auto c2 = counts_of(r.report, "F2");
  auto l = whole(leaf_count(r.tree));
  if (!(l >= max_leaves_lower_bound(c1, c2))) o.fail(tag + ": lower bound violated");
  if (!(l >= max_leaves_ratio_floor(c1, c2))) o.fail(tag + ": ratio floor violated");
  if (!r.report.certificate_ok) o.fail(tag + ": certificate_ok is false");
}

Outcome criterion_ratio() {
  Outcome o;
  std::size_t suboptimal = 0;
  double worst = 1.0;
  for (const auto& e : ratio_corpus()) {
    auto l = static_cast<Weight>(max_leaves(e.d).report.leaf_count);
    if (l < e.opt) ++suboptimal;
    worst = std::max(worst, static_cast<double>(e.opt) / static_cast<double>(l));
    if (!(3 * l > 2 * e.opt))
      o.fail(seed_tag(e.seed) + ": leaves " + std::to_string(l) + ", opt " +
             std::to_string(e.opt));
  }
  if (o.ok) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "2000 instances, %zu below opt, worst opt/leaves %.4f",
                  suboptimal, worst);
    o.detail = buf;
  }
  return o;
}

Outcome criterion_certificates() {
  Outcome o;
  std::size_t runs = 0;
  for (const auto& e : ratio_corpus()) {
    check_max_leaves_certificate(e.d, seed_tag(e.seed), o);
    ++runs;
  }
  for (std::size_t k = 1; k <= 40; ++k) {
    auto d = gen_adversarial_family(k);
    check_max_leaves_certificate(d, "adversarial k=" + std::to_string(k), o);
    ++runs;
  }
  const std::size_t sizes[] = {200, 1000, 5000, 10000};
  const double degrees[] = {1.0, 3.0, 8.0};
  std::uint64_t seed = 50000;
  for (auto n : sizes)
    for (auto deg : degrees)
      for (int rep = 0; rep < 3; ++rep, ++seed) {
        auto d = gen_random_rooted_dag(n, deg / static_cast<double>(n), seed);
        check_max_leaves_certificate(d, "n=" + std::to_string(n) + " " + seed_tag(seed), o);
        ++runs;
      }
  if (o.ok) o.detail = std::to_string(runs) + " runs up to n=10000, both inequalities exact";
  return o;
}

Outcome criterion_worked_numbers() {
  Outcome o;
  PhaseCounts c1{25, 3}, c2{30, 4};
  auto lb = max_leaves_lower_bound(c1, c2);
  auto u2 = expansion_upper_bound(c2);
  auto u3 = matching_upper_bound(c1, c2);
  if (lb != Rational(53, 3)) o.fail("lower bound " + to_string(lb));
  if (lb != Rational(11, 3) + Rational(14)) o.fail("lower bound split");
  if (u2 != Rational(27)) o.fail("U2 " + to_string(u2));
  if (u3 != Rational(25)) o.fail("U3 " + to_string(u3));
  if (o.ok)
    o.detail = "lb " + to_string(lb) + ", U2 " + to_string(u2) + ", U3 " + to_string(u3);
  return o;
}

Outcome criterion_upper_bounds() {
  Outcome o;
  for (const auto& e : ratio_corpus()) {
    auto r = max_leaves(e.d);
    auto c1 = counts_of(r.report, "F1");
    auto c2 = counts_of(r.report, "F2");
    auto u = std::min(expansion_upper_bound(c2), matching_upper_bound(c1, c2));
    if (!(Rational(e.opt) <= u))
      o.fail(seed_tag(e.seed) + ": opt " + std::to_string(e.opt) + " > " + to_string(u));
    if (*r.report.expansion_upper_bound != expansion_upper_bound(c2) ||
        *r.report.matching_upper_bound != matching_upper_bound(c1, c2))
      o.fail(seed_tag(e.seed) + ": reported bounds differ from recomputation");
  }
  if (o.ok) o.detail = "2000 instances, opt <= min(U2, U3) on all";
  return o;
}

Outcome criterion_matching() {
  Outcome o;
  auto check = [&](const UndirectedGraph& g, const std::string& tag) {
    auto m = max_matching(g);
    if (!is_matching(g, m)) o.fail(tag + ": not a matching");
    auto b = brute_force_matching(g).size();
    if (m.size() != b)
      o.fail(tag + ": blossom " + std::to_string(m.size()) + ", brute force " + std::to_string(b));
  };
  check(oracle::complete_graph(3), "triangle");
  for (std::size_t n = 1; n <= 12; ++n) check(oracle::path_graph(n), "path " + std::to_string(n));
  check(oracle::petersen(), "petersen");
  if (max_matching(oracle::petersen()).size() != 5) o.fail("petersen is not 5");
  std::size_t random = 0;
  for (std::uint64_t seed = 0; random < 500; ++seed) {
    Rng rng(seed);
    auto n = 1 + rng.below(12);
    double p = 0.05 + static_cast<double>(rng.below(50)) / 100.0;
    auto g = gen_random_graph(n, p, seed);
    if (g.edges.size() > kBruteForceMatchingMaxEdges) continue;
    check(g, seed_tag(seed));
    ++random;
  }
  if (o.ok) o.detail = "500 random graphs plus triangle, paths, petersen";
  return o;
}

Outcome criterion_max_expand() {
  Outcome o;
  std::size_t with_candidates = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed + 7000);
    auto n = 4 + rng.below(30);
    double p = static_cast<double>(rng.below(40)) / 100.0;
    auto d = gen_random_rooted_dag(n, p, seed + 7000);
    auto f1 = greedy_expand(d, 3, empty_branching(d));
    auto r = max_expand(d, f1);
    auto best = oracle::max_compatible_two_expansions(f1);
    if (r.matching_size != best)
      o.fail(seed_tag(seed) + ": applied " + std::to_string(r.matching_size) + ", best " +
             std::to_string(best));
    auto applied = std::size_t{0};
    for (VertexId v = 0; v < d.vertex_count(); ++v)
      if (f1.out_degree(v) == 0 && r.branching.out_degree(v) == 2) ++applied;
    if (applied != r.matching_size) o.fail(seed_tag(seed) + ": expansion count mismatch");
    if (best > 0) ++with_candidates;
  }
  if (o.ok)
    o.detail = "300 pipelines (" + std::to_string(with_candidates) +
               " with candidates), applied == brute-force maximum";
  return o;
}

Outcome criterion_w3dm() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed + 9000);
    auto n = 1 + rng.below(11);
    double p = static_cast<double>(rng.below(80)) / 100.0;
    auto d = gen_random_rooted_dag(n, p, seed + 9000);
    auto opt = exact_max_leaves(d).value;
    for (const auto& packer : {exact_packer(), greedy_packer()}) {
      auto tag = seed_tag(seed) + " " + packer.name;
      auto r = max_leaves_w3dm(d, packer);
      auto leaves = static_cast<Weight>(leaf_count(r.tree));
      auto l = Rational(leaves);
      const auto& rep = r.report;
      auto c1 = counts_of(rep, "F1");
      auto c2 = counts_of(rep, "F2");
      auto c3 = counts_of(rep, "F3");
      if (!(l >= w3dm_lower_bound(c1, c2, c3))) o.fail(tag + ": lower bound violated");
      auto l1 = rep.phase("F1")->stats.leaves;
      auto l2 = rep.phase("F2")->stats.leaves;
      auto l3 = rep.phase("F3")->stats.leaves;
      if (l1 - l2 != rep.three_set_expansions) o.fail(tag + ": 3-set leaf loss");
      if (l2 - l3 != rep.two_set_expansions) o.fail(tag + ": 2-set leaf loss");
      if (!(Rational(opt) <= w3dm_upper_bound(c1, c2, c3, packer.claimed_alpha)))
        o.fail(tag + ": opt above upper bound");
      if (!rep.certificate_ok) o.fail(tag + ": certificate_ok is false");
      if (packer.claimed_alpha == Rational(1) && !(3 * opt <= 4 * leaves))
        o.fail(tag + ": opt " + std::to_string(opt) + " > 4/3 * " + to_string(l));
    }
  }
  if (o.ok) o.detail = "500 instances, opt <= 4/3 * leaves with exact packing";
  return o;
}

Outcome criterion_reduction() {
  Outcome o;
  auto check = [&](const UndirectedGraph& g, const std::string& tag) {
    auto d = reduce_independent_set(g);
    auto n = g.vertex_count, m = g.edges.size();
    if (d.vertex_count() != n + m + 1 || d.arc_count() != n + 2 * m || d.max_in_degree() > 2)
      o.fail(tag + ": reduced shape");
    auto alpha = brute_force_max_independent_set(g).size;
    auto r = exact_max_leaves(d, Objective::kLeafWeight);
    if (r.value != static_cast<Weight>(alpha))
      o.fail(tag + ": weight " + std::to_string(r.value) + ", alpha " + std::to_string(alpha));
    auto is = leaves_to_independent_set(r.tree);
    if (!is_independent_set(g, is) || is.size() != alpha) o.fail(tag + ": recovered set");
  };
  check(oracle::complete_graph(3), "K3");
  check(oracle::petersen(), "petersen");
  check(UndirectedGraph::make(6, {}), "edgeless");
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed + 11000);
    auto n = 1 + rng.below(8);
    double p = static_cast<double>(rng.below(100)) / 100.0;
    check(gen_random_graph(n, p, seed + 11000), seed_tag(seed));
  }
  if (o.ok) o.detail = "200 random graphs plus K3, petersen, edgeless";
  return o;
}

Outcome criterion_baseline() {
  Outcome o;
  for (const auto& e : ratio_corpus()) {
    auto l = static_cast<Weight>(expansion_baseline(e.d).report.leaf_count);
    if (!(2 * l >= e.opt))
      o.fail(seed_tag(e.seed) + ": leaves " + std::to_string(l) + ", opt " +
             std::to_string(e.opt));
  }
  if (o.ok) o.detail = "2000 instances, 2*leaves >= opt on all";
  return o;
}

Outcome criterion_end_to_end() {
  Outcome o;
  auto dir = fs::temp_directory_path() / "leafy_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto call = [](std::vector<std::string> args) {
    args.insert(args.begin(), "leafy");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return std::make_pair(code, err.str());
  };
  std::size_t runs = 0;
  for (int seed = 0; seed < 100; ++seed) {
    auto s = std::to_string(seed);
    struct Gen {
      std::string name;
      std::vector<std::string> args;
      std::string objective;
    };
    std::vector<Gen> gens = {
        {"random", {"--generator", "random", "-n", std::to_string(2 + seed % 13), "-p", "0.3"},
         "count"},
        {"adversarial", {"--generator", "adversarial", "-k", std::to_string(1 + seed % 6)},
         "count"},
        {"is", {"--generator", "is-reduction", "-n", std::to_string(1 + seed % 7), "-p", "0.4"},
         "weight"},
    };
    for (const auto& g : gens) {
      auto inst = (dir / (g.name + s + ".json")).string();
      auto args = g.args;
      args.insert(args.begin(), "gen");
      for (const auto& extra : {std::string("--seed"), s, std::string("-o"), inst})
        args.push_back(extra);
      if (auto [code, err] = call(args); code != 0) {
        o.fail(g.name + " seed " + s + ": gen exited " + std::to_string(code) + " " + err);
        continue;
      }
      for (const auto& algo : cli::algorithm_names()) {
        auto sol = (dir / (g.name + s + "_" + algo + ".sol.json")).string();
        auto tag = g.name + " seed " + s + " " + algo;
        if (auto [code, err] =
                call({"solve", "-i", inst, "--algo", algo, "--objective", g.objective, "-o", sol});
            code != 0) {
          o.fail(tag + ": solve exited " + std::to_string(code) + " " + err);
          continue;
        }
        if (auto [code, err] = call({"verify", "-i", inst, "-s", sol}); code != 0)
          o.fail(tag + ": verify exited " + std::to_string(code) + " " + err);
        ++runs;
      }
    }
  }
  fs::remove_all(dir);
  if (o.ok) o.detail = std::to_string(runs) + " gen/solve/verify runs exited 0";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "ratio above 2/3 of optimum", criterion_ratio},
      {2, "bound certificates", criterion_certificates},
      {3, "worked numbers", criterion_worked_numbers},
      {4, "upper bounds against optimum", criterion_upper_bounds},
      {5, "matching cardinality", criterion_matching},
      {6, "max expand optimality", criterion_max_expand},
      {7, "set-packing pipeline", criterion_w3dm},
      {8, "independent set reduction", criterion_reduction},
      {9, "baseline half of optimum", criterion_baseline},
      {10, "end to end", criterion_end_to_end},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%2d] %-30s %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    if (!o.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
