#include "leafy/solvers.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "leafy/certificates.hpp"
#include "leafy/errors.hpp"
#include "leafy/matching.hpp"

namespace leafy {

const PhaseRecord* SolveReport::phase(const std::string& name) const {
  for (const auto& p : phases)
    if (p.name == name) return &p;
  return nullptr;
}

std::size_t leaf_count(const Branching& b) {
  std::size_t count = 0;
  for (VertexId v = 0; v < b.host().vertex_count(); ++v)
    if (b.out_degree(v) == 0) ++count;
  return count;
}

Weight leaf_weight(const Branching& b) {
  Weight total = 0;
  for (VertexId v = 0; v < b.host().vertex_count(); ++v)
    if (b.out_degree(v) == 0) total += b.host().weight(v);
  return total;
}

namespace {

void require_same_host(const Digraph& d, const Branching& f) {
  if (&f.host() != &d) throw PreconditionViolated("branching belongs to a different digraph");
}

PhaseRecord snapshot(std::string name, const Branching& b) {
  return {std::move(name), stats(b), {b.arcs().begin(), b.arcs().end()}};
}

void finish_report(SolveReport& report, const Branching& tree) {
  report.phases.push_back(snapshot("T", tree));
  report.leaf_count = leaf_count(tree);
  if (tree.host().has_weights()) report.leaf_weight = leaf_weight(tree);
}

}  // namespace

Branching greedy_expand(const Digraph& d, std::size_t t, const Branching& f) {
  require_same_host(d, f);
  if (t == 0) throw PreconditionViolated("t must be positive");
  if (t == 1) {
    if (!internal_coverage_holds(f))
      throw PreconditionViolated("an internal vertex still has a parentless out-neighbor");
  } else if (!is_t_branching(f, t + 1)) {
    throw PreconditionViolated("input is not a " + std::to_string(t + 1) + "-branching");
  }
  Branching out = f;
  for (VertexId v : d.topological_order()) {
    if (out.out_degree(v) != 0) continue;
    auto heads = out.free_out_neighbors(v);
    if (heads.size() >= t) out.expand(v, heads);
  }
  return out;
}

ExpansionMultigraph expansion_multigraph(const Branching& f) {
  const Digraph& d = f.host();
  ExpansionMultigraph g;
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (!f.has_parent(v)) g.node_ids.push_back(v);
  for (VertexId v : d.topological_order()) {
    if (f.out_degree(v) != 0) continue;
    auto heads = f.free_out_neighbors(v);
    if (heads.size() == 2) g.edges.push_back({heads[0], heads[1], v});
  }
  return g;
}

MaxExpandResult max_expand(const Digraph& d, const Branching& f) {
  require_same_host(d, f);
  if (!is_t_branching(f, 3) || !is_maximal(f, 3))
    throw PreconditionViolated("input is not a maximal 3-branching");

  auto multigraph = expansion_multigraph(f);
  // Collapse parallel edges; the representative is the smallest candidate id.
  std::map<Edge, VertexId> representative;
  for (const auto& e : multigraph.edges) {
    Edge key{std::min(e.a, e.b), std::max(e.a, e.b)};
    auto [it, fresh] = representative.emplace(key, e.candidate);
    if (!fresh) it->second = std::min(it->second, e.candidate);
  }

  // Only endpoints of some edge matter; index them in ascending vertex order.
  std::vector<VertexId> nodes;
  for (const auto& [key, cand] : representative) {
    nodes.push_back(key.first);
    nodes.push_back(key.second);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  auto index_of = [&](VertexId v) {
    return static_cast<VertexId>(std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  };
  std::vector<Edge> simple_edges;
  for (const auto& [key, cand] : representative)
    simple_edges.emplace_back(index_of(key.first), index_of(key.second));
  auto simple = UndirectedGraph::make(nodes.size(), std::move(simple_edges));
  auto matching = max_matching(simple);

  std::vector<VertexId> chosen;
  for (auto [a, b] : matching) chosen.push_back(representative.at({nodes[a], nodes[b]}));
  std::sort(chosen.begin(), chosen.end(), [&](VertexId x, VertexId y) {
    return d.topological_position(x) < d.topological_position(y);
  });

  MaxExpandResult result{f, matching.size()};
  for (VertexId v : chosen) result.branching.expand(v, f.free_out_neighbors(v));
  return result;
}

Branching attach_remaining(const Digraph& d, const Branching& f) {
  require_same_host(d, f);
  Branching out = f;
  for (VertexId v : d.topological_order()) {
    if (v == d.root() || out.has_parent(v)) continue;
    auto in = d.in_neighbors(v);
    // in-neighbors are ascending, so the first hit is the smallest id.
    auto internal = std::find_if(in.begin(), in.end(),
                                 [&](VertexId u) { return out.out_degree(u) > 0; });
    out.attach(internal != in.end() ? *internal : in.front(), v);
  }
  return out;
}

SolveResult max_leaves(const Digraph& d) {
  SolveReport report;
  report.algorithm = "maxleaves";

  Branching first = greedy_expand(d, 3, empty_branching(d));
  report.phases.push_back(snapshot("F1", first));
  auto [second, matched] = max_expand(d, first);
  report.matching_size = matched;
  report.phases.push_back(snapshot("F2", second));
  Branching tree = attach_remaining(d, second);
  finish_report(report, tree);

  auto c1 = phase_counts(report.phases[0].stats);
  auto c2 = phase_counts(report.phases[1].stats);
  report.leaf_lower_bound = max_leaves_lower_bound(c1, c2);
  report.expansion_upper_bound = expansion_upper_bound(c2);
  report.matching_upper_bound = matching_upper_bound(c1, c2);
  Rational leaves(static_cast<std::int64_t>(report.leaf_count));
  report.certificate_ok =
      leaves >= *report.leaf_lower_bound && leaves >= max_leaves_ratio_floor(c1, c2);
  return {std::move(tree), std::move(report)};
}

SolveResult expansion_baseline(const Digraph& d) {
  SolveReport report;
  report.algorithm = "expansion2";

  Branching only = greedy_expand(d, 2, empty_branching(d));
  report.phases.push_back(snapshot("F1", only));
  Branching tree = attach_remaining(d, only);
  finish_report(report, tree);

  auto c = phase_counts(report.phases[0].stats);
  report.leaf_lower_bound = expansion_lower_bound(c);
  report.expansion_upper_bound = expansion_upper_bound(c);
  Rational leaves(static_cast<std::int64_t>(report.leaf_count));
  report.certificate_ok = leaves >= *report.leaf_lower_bound &&
                          2 * leaves >= *report.expansion_upper_bound;
  return {std::move(tree), std::move(report)};
}

SetSystem packing_system(const Branching& f) {
  const Digraph& d = f.host();
  SetSystem system;
  for (VertexId v : d.topological_order()) {
    if (f.out_degree(v) != 0) continue;
    auto heads = f.free_out_neighbors(v);
    if (heads.size() < 2 || heads.size() > 3) continue;
    system.sets.push_back({heads, static_cast<Weight>(heads.size()) - 1, v});
    if (heads.size() == 3) {
      system.sets.push_back({{heads[0], heads[1]}, 1, v});
      system.sets.push_back({{heads[0], heads[2]}, 1, v});
      system.sets.push_back({{heads[1], heads[2]}, 1, v});
    }
    system.elements.insert(system.elements.end(), heads.begin(), heads.end());
  }
  std::sort(system.elements.begin(), system.elements.end());
  system.elements.erase(std::unique(system.elements.begin(), system.elements.end()),
                        system.elements.end());
  return system;
}

SolveResult max_leaves_w3dm(const Digraph& d, const SetPacker& packer) {
  SolveReport report;
  report.algorithm = "w3dm-" + packer.name;
  report.claimed_alpha = packer.claimed_alpha;

  Branching first = greedy_expand(d, 4, empty_branching(d));
  report.phases.push_back(snapshot("F1", first));

  auto selection = packer.pack(packing_system(first));
  if (!pairwise_disjoint(selection))
    throw PreconditionViolated("packer '" + packer.name + "' returned overlapping sets");
  std::sort(selection.begin(), selection.end(), [&](const auto& x, const auto& y) {
    return d.topological_position(x.candidate) < d.topological_position(y.candidate);
  });
  report.matching_size = selection.size();

  Branching second = first;
  for (const auto& s : selection) {
    if (s.members.size() != 3) continue;
    second.expand(s.candidate, s.members);
    ++report.three_set_expansions;
  }
  report.phases.push_back(snapshot("F2", second));

  Branching third = second;
  for (const auto& s : selection) {
    if (s.members.size() != 2) continue;
    third.expand(s.candidate, s.members);
    ++report.two_set_expansions;
  }
  report.phases.push_back(snapshot("F3", third));

  Branching tree = attach_remaining(d, third);
  finish_report(report, tree);

  const auto& s1 = report.phases[0].stats;
  const auto& s2 = report.phases[1].stats;
  const auto& s3 = report.phases[2].stats;
  auto c1 = phase_counts(s1), c2 = phase_counts(s2), c3 = phase_counts(s3);
  report.packing_lower_bound = w3dm_lower_bound(c1, c2, c3);
  report.packing_upper_bound = w3dm_upper_bound(c1, c2, c3, packer.claimed_alpha);

  // Each 3-set costs one leaf and three arcs, each 2-set one leaf and two arcs.
  const auto b3 = static_cast<std::int64_t>(report.three_set_expansions);
  const auto b2 = static_cast<std::int64_t>(report.two_set_expansions);
  bool losses_consistent =
      static_cast<std::int64_t>(s1.leaves) - static_cast<std::int64_t>(s2.leaves) == b3 &&
      c2.excess() - c1.excess() == 3 * b3 &&
      static_cast<std::int64_t>(s2.leaves) - static_cast<std::int64_t>(s3.leaves) == b2 &&
      c3.excess() - c2.excess() == 2 * b2;
  Rational leaves(static_cast<std::int64_t>(report.leaf_count));
  report.certificate_ok = losses_consistent && leaves >= *report.packing_lower_bound &&
                          *report.packing_upper_bound <= w3dm_ratio(packer.claimed_alpha) * leaves;
  return {std::move(tree), std::move(report)};
}

}  // namespace leafy
