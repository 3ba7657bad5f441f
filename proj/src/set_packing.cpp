#include "leafy/set_packing.hpp"

#include <algorithm>
#include <unordered_map>

#include "leafy/errors.hpp"

namespace leafy {

bool precedes(const WeightedSet& a, const WeightedSet& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  if (a.candidate != b.candidate) return a.candidate < b.candidate;
  return a.members < b.members;
}

Weight total_weight(const std::vector<WeightedSet>& selection) {
  Weight w = 0;
  for (const auto& s : selection) w += s.weight;
  return w;
}

bool pairwise_disjoint(const std::vector<WeightedSet>& selection) {
  std::vector<VertexId> all;
  for (const auto& s : selection) all.insert(all.end(), s.members.begin(), s.members.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

namespace {

std::vector<WeightedSet> canonical(const SetSystem& s) {
  std::vector<WeightedSet> sets = s.sets;
  for (auto& set : sets) std::sort(set.members.begin(), set.members.end());
  std::stable_sort(sets.begin(), sets.end(), precedes);
  return sets;
}

// Members re-indexed densely so conflicts can be tracked in a flat array.
struct DenseSets {
  std::vector<std::vector<std::size_t>> members;
  std::size_t element_count = 0;
};

DenseSets densify(const std::vector<WeightedSet>& sets) {
  std::unordered_map<VertexId, std::size_t> index;
  DenseSets dense;
  for (const auto& set : sets) {
    auto& row = dense.members.emplace_back();
    for (VertexId m : set.members) {
      auto [it, fresh] = index.emplace(m, index.size());
      row.push_back(it->second);
    }
  }
  dense.element_count = index.size();
  return dense;
}

}  // namespace

std::vector<WeightedSet> pack_greedy(const SetSystem& s) {
  auto sets = canonical(s);
  auto dense = densify(sets);
  std::vector<bool> used(dense.element_count, false);
  std::vector<WeightedSet> chosen;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& row = dense.members[i];
    if (std::any_of(row.begin(), row.end(), [&](std::size_t e) { return used[e]; })) continue;
    for (auto e : row) used[e] = true;
    chosen.push_back(sets[i]);
  }
  return chosen;
}

std::vector<WeightedSet> pack_exact(const SetSystem& s) {
  if (s.sets.size() > kExactPackingMaxSets)
    throw TooLarge("exact packing limited to " + std::to_string(kExactPackingMaxSets) +
                   " sets, got " + std::to_string(s.sets.size()));
  auto sets = canonical(s);
  auto dense = densify(sets);
  const std::size_t count = sets.size();
  std::vector<int> used(dense.element_count, 0);
  auto fits = [&](std::size_t i) {
    return std::none_of(dense.members[i].begin(), dense.members[i].end(),
                        [&](std::size_t e) { return used[e] != 0; });
  };

  std::vector<std::size_t> current, best;
  Weight current_weight = 0, best_weight = -1;

  auto search = [&](auto&& self, std::size_t i) -> void {
    // Optimistic completion: every later set still compatible with the
    // current selection. Pruned unless it could strictly beat (weight, count).
    Weight bound_weight = current_weight;
    std::size_t bound_count = current.size();
    for (std::size_t j = i; j < count; ++j) {
      if (fits(j)) {
        bound_weight += sets[j].weight;
        ++bound_count;
      }
    }
    if (bound_weight < best_weight ||
        (bound_weight == best_weight && bound_count <= best.size()))
      return;
    if (i == count) {
      best = current;
      best_weight = current_weight;
      return;
    }
    if (fits(i)) {
      for (auto e : dense.members[i]) ++used[e];
      current.push_back(i);
      current_weight += sets[i].weight;
      self(self, i + 1);
      current_weight -= sets[i].weight;
      current.pop_back();
      for (auto e : dense.members[i]) --used[e];
    }
    self(self, i + 1);
  };
  search(search, 0);

  std::vector<WeightedSet> chosen;
  for (auto i : best) chosen.push_back(sets[i]);
  return chosen;
}

SetPacker greedy_packer() { return {"greedy", Rational(3), pack_greedy}; }

SetPacker exact_packer() { return {"exact", Rational(1), pack_exact}; }

}  // namespace leafy
