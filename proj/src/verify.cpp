#include "leafy/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "leafy/certificates.hpp"
#include "leafy/errors.hpp"
#include "leafy/exact.hpp"

namespace leafy {

using nlohmann::json;

namespace {

class Checker {
  struct Phase {
    Branching branching;
    BranchingStats stats;
  };

 public:
  Checker(const Digraph& d, const SolutionFile& s) : d_(d), s_(s) {}

  VerifyOutcome run() {
    auto tree = rebuild_tree();
    if (!tree) return std::move(outcome_);
    check_leaves(*tree);
    if (!s_.report.contains("algorithm") || !s_.report["algorithm"].is_string()) {
      fail("report has no algorithm name");
      return std::move(outcome_);
    }
    algorithm_ = s_.report["algorithm"].get<std::string>();
    if (!rebuild_phases(*tree)) return std::move(outcome_);
    check_algorithm(*tree);
    if (!s_.report.value("certificate_ok", false)) fail("report does not claim certificate_ok");
    return std::move(outcome_);
  }

 private:
  void fail(std::string what) { outcome_.violations.push_back(std::move(what)); }

  std::optional<Branching> rebuild_tree() {
    const auto n = d_.vertex_count();
    if (s_.parent.size() != n) {
      fail("parent array has " + std::to_string(s_.parent.size()) + " entries, expected " +
           std::to_string(n));
      return std::nullopt;
    }
    Branching tree(d_);
    bool good = true;
    for (VertexId v = 0; v < n; ++v) {
      const auto& p = s_.parent[v];
      if (v == d_.root()) {
        if (p) {
          fail("root " + std::to_string(v) + " has parent " + std::to_string(*p));
          good = false;
        }
        continue;
      }
      if (!p) {
        fail("vertex " + std::to_string(v) + " has no parent");
        good = false;
        continue;
      }
      try {
        tree.attach(*p, v);
      } catch (const Error& e) {
        fail(e.what());
        good = false;
      }
    }
    if (!good) return std::nullopt;
    if (!is_spanning_arborescence(tree)) {
      fail("parent array is not a spanning arborescence");
      return std::nullopt;
    }
    return tree;
  }

  void check_leaves(const Branching& tree) {
    auto leaves = leaf_count(tree);
    if (leaves != s_.leaf_count)
      fail("leaf_count claims " + std::to_string(s_.leaf_count) + ", recomputed " +
           std::to_string(leaves));
    if (d_.has_weights()) {
      auto weight = leaf_weight(tree);
      if (!s_.leaf_weight)
        fail("weighted instance but no leaf_weight");
      else if (*s_.leaf_weight != weight)
        fail("leaf_weight claims " + std::to_string(*s_.leaf_weight) + ", recomputed " +
             std::to_string(weight));
    }
  }

  // Replays every recorded phase and checks it sits inside the final tree.
  bool rebuild_phases(const Branching& tree) {
    const json& report = s_.report;
    if (!report.contains("phases") || !report["phases"].is_array()) {
      fail("report has no phases");
      return false;
    }
    for (const json& p : report["phases"]) {
      if (!p.is_object() || !p.contains("name") || !p["name"].is_string() ||
          !p.contains("arcs") || !p["arcs"].is_array()) {
        fail("malformed phase record");
        return false;
      }
      auto name = p["name"].get<std::string>();
      Branching b(d_);
      for (const json& arc : p["arcs"]) {
        if (!arc.is_array() || arc.size() != 2 || !arc[0].is_number_unsigned() ||
            !arc[1].is_number_unsigned()) {
          fail("phase " + name + " has a malformed arc");
          return false;
        }
        auto u = arc[0].get<VertexId>(), v = arc[1].get<VertexId>();
        if (u >= d_.vertex_count() || v >= d_.vertex_count()) {
          fail("phase " + name + " arc out of range");
          return false;
        }
        if (tree.parent(v) != u) {
          fail("vertex " + std::to_string(v) + " has in-degree 2: phase " + name + " arc (" +
               std::to_string(u) + "," + std::to_string(v) + ") disagrees with parent " +
               (tree.parent(v) ? std::to_string(*tree.parent(v)) : std::string("none")));
          return false;
        }
        try {
          b.attach(u, v);
        } catch (const Error& e) {
          fail("phase " + name + ": " + e.what());
          return false;
        }
      }
      auto st = stats(b);
      auto claim = [&](const char* key, std::size_t actual) {
        if (p.contains(key) && (!p[key].is_number_unsigned() || p[key].get<std::size_t>() != actual))
          fail("phase " + name + " claims " + key + " = " + p[key].dump() + ", recomputed " +
               std::to_string(actual));
      };
      claim("N", st.nontrivial_vertices);
      claim("k", st.nontrivial_components);
      claim("leaves", st.leaves);
      if (name.size() == 2 && name[0] == 'F') {
        auto suffix = name.substr(1);
        if (report.contains("N" + suffix) &&
            report["N" + suffix] != json(st.nontrivial_vertices))
          fail("report N" + suffix + " disagrees with phase arcs");
        if (report.contains("k" + suffix) &&
            report["k" + suffix] != json(st.nontrivial_components))
          fail("report k" + suffix + " disagrees with phase arcs");
      }
      phases_.emplace(name, Phase{std::move(b), st});
    }
    auto t = phases_.find("T");
    if (t == phases_.end()) {
      fail("report has no final phase T");
      return false;
    }
    if (t->second.branching.arcs().size() != tree.arcs().size())
      fail("phase T does not match the parent array");
    return outcome_.ok();
  }

  const Phase* phase(const std::string& name) {
    auto it = phases_.find(name);
    if (it == phases_.end()) {
      fail("report lacks phase " + name);
      return nullptr;
    }
    return &it->second;
  }

  void nested(const Phase& inner, const std::string& inner_name, const Phase& outer,
              const std::string& outer_name) {
    for (const Arc& a : inner.branching.arcs())
      if (outer.branching.parent(a.head) != a.tail)
        fail("phase " + inner_name + " is not contained in " + outer_name);
  }

  void claim_bound(const char* key, const Rational& actual) {
    const json& report = s_.report;
    if (!report.contains(key) || !report[key].is_string()) {
      fail(std::string("report lacks ") + key);
      return;
    }
    try {
      auto claimed = parse_rational(report[key].get<std::string>());
      if (claimed != actual)
        fail(std::string(key) + " claims " + to_string(claimed) + ", recomputed " +
             to_string(actual));
    } catch (const ParseError& e) {
      fail(std::string(key) + ": " + e.what());
    }
  }

  void check_algorithm(const Branching& tree) {
    const Rational leaves(static_cast<std::int64_t>(leaf_count(tree)));
    const auto& final_phase = phases_.at("T");
    if (algorithm_ == "maxleaves") {
      auto* f1 = phase("F1");
      auto* f2 = phase("F2");
      if (!f1 || !f2) return;
      nested(*f1, "F1", *f2, "F2");
      nested(*f2, "F2", final_phase, "T");
      if (!is_maximal_t(f1->branching, 3)) fail("F1 is not a maximal 3-branching");
      if (!is_maximal_t(f2->branching, 2)) fail("F2 is not a maximal 2-branching");
      if (!outcome_.ok()) return;
      auto matched = (f2->stats.arcs - f1->stats.arcs) / 2;
      auto best = max_expand(d_, f1->branching).matching_size;
      if (matched != best)
        fail("F2 applies " + std::to_string(matched) + " 2-expansions, maximum is " +
             std::to_string(best));
      auto c1 = phase_counts(f1->stats), c2 = phase_counts(f2->stats);
      claim_bound("lb_lemma1", max_leaves_lower_bound(c1, c2));
      claim_bound("ub_lemma2", expansion_upper_bound(c2));
      claim_bound("ub_lemma3", matching_upper_bound(c1, c2));
      if (leaves < max_leaves_lower_bound(c1, c2)) fail("leaf count below lb_lemma1");
      if (leaves < max_leaves_ratio_floor(c1, c2))
        fail("leaf count below (ub_lemma3-1)/3 + (ub_lemma2-1)/3 + 1");
    } else if (algorithm_ == "expansion2") {
      auto* f1 = phase("F1");
      if (!f1) return;
      nested(*f1, "F1", final_phase, "T");
      if (!is_maximal_t(f1->branching, 2)) fail("F1 is not a maximal 2-branching");
      auto c = phase_counts(f1->stats);
      claim_bound("lb_lemma1", expansion_lower_bound(c));
      claim_bound("ub_lemma2", expansion_upper_bound(c));
      if (leaves < expansion_lower_bound(c)) fail("leaf count below (N-k)/2 + 1");
      if (2 * leaves < expansion_upper_bound(c)) fail("leaf count below ub_lemma2 / 2");
    } else if (algorithm_ == "w3dm-greedy" || algorithm_ == "w3dm-exact") {
      check_packing(leaves, algorithm_ == "w3dm-exact" ? Rational(1) : Rational(3));
    } else if (algorithm_ == "exact") {
      auto objective = s_.report.value("objective", std::string("count")) == "weight"
                           ? Objective::kLeafWeight
                           : Objective::kLeafCount;
      if (exact_in_range(d_)) {
        auto best = exact_max_leaves(d_, objective).value;
        Weight mine = objective == Objective::kLeafWeight ? leaf_weight(tree)
                                                          : static_cast<Weight>(leaf_count(tree));
        if (mine != best)
          fail("exact solution has value " + std::to_string(mine) + ", optimum is " +
               std::to_string(best));
      }
    } else {
      fail("unknown algorithm '" + algorithm_ + "'");
    }
  }

  void check_packing(const Rational& leaves, const Rational& alpha) {
    auto* f1 = phase("F1");
    auto* f2 = phase("F2");
    auto* f3 = phase("F3");
    if (!f1 || !f2 || !f3) return;
    nested(*f1, "F1", *f2, "F2");
    nested(*f2, "F2", *f3, "F3");
    nested(*f3, "F3", phases_.at("T"), "T");
    if (!is_maximal_t(f1->branching, 4)) fail("F1 is not a maximal 4-branching");
    auto s1 = f1->stats, s2 = f2->stats, s3 = f3->stats;
    auto c1 = phase_counts(s1), c2 = phase_counts(s2), c3 = phase_counts(s3);
    auto lost12 = static_cast<std::int64_t>(s1.leaves) - static_cast<std::int64_t>(s2.leaves);
    auto lost23 = static_cast<std::int64_t>(s2.leaves) - static_cast<std::int64_t>(s3.leaves);
    if (3 * lost12 != c2.excess() - c1.excess())
      fail("F1 -> F2 leaf loss does not match one leaf per 3-expansion");
    if (2 * lost23 != c3.excess() - c2.excess())
      fail("F2 -> F3 leaf loss does not match one leaf per 2-expansion");
    if (s_.report.contains("claimed_alpha")) claim_bound("claimed_alpha", alpha);
    claim_bound("lb_lemma4", w3dm_lower_bound(c1, c2, c3));
    claim_bound("ub_lemma5", w3dm_upper_bound(c1, c2, c3, alpha));
    if (leaves < w3dm_lower_bound(c1, c2, c3)) fail("leaf count below lb_lemma4");
    if (w3dm_upper_bound(c1, c2, c3, alpha) > w3dm_ratio(alpha) * leaves)
      fail("ub_lemma5 exceeds max(4/3, alpha) times the leaf count");
  }

  static bool is_maximal_t(const Branching& b, std::size_t t) {
    return is_t_branching(b, t) && is_maximal(b, t);
  }

  const Digraph& d_;
  const SolutionFile& s_;
  std::string algorithm_;
  std::map<std::string, Phase> phases_;
  VerifyOutcome outcome_;
};

}  // namespace

VerifyOutcome verify_solution(const Digraph& d, const SolutionFile& solution) {
  return Checker(d, solution).run();
}

}  // namespace leafy
