#pragma once

// Test-only reference implementations. Nothing here calls into the solver
// code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <vector>

#include "leafy/branching.hpp"
#include "leafy/digraph.hpp"
#include "leafy/undirected_graph.hpp"

namespace leafy::oracle {

inline std::size_t reachable_from_root(const Digraph& d) {
  std::vector<bool> seen(d.vertex_count(), false);
  std::queue<VertexId> queue;
  queue.push(d.root());
  seen[d.root()] = true;
  std::size_t count = 0;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop();
    ++count;
    for (auto w : d.out_neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        queue.push(w);
      }
  }
  return count;
}

/// Every topological order, by recursive choice among ready vertices.
inline std::vector<std::vector<VertexId>> all_topological_orders(const Digraph& d) {
  const auto n = d.vertex_count();
  std::vector<std::size_t> indeg(n);
  for (VertexId v = 0; v < n; ++v) indeg[v] = d.in_degree(v);
  std::vector<bool> placed(n, false);
  std::vector<VertexId> current;
  std::vector<std::vector<VertexId>> all;
  std::function<void()> rec = [&] {
    if (current.size() == n) {
      all.push_back(current);
      return;
    }
    for (VertexId v = 0; v < n; ++v) {
      if (placed[v] || indeg[v] != 0) continue;
      placed[v] = true;
      current.push_back(v);
      for (auto w : d.out_neighbors(v)) --indeg[w];
      rec();
      for (auto w : d.out_neighbors(v)) ++indeg[w];
      current.pop_back();
      placed[v] = false;
    }
  };
  rec();
  return all;
}

struct Recount {
  std::size_t nontrivial_vertices = 0, nontrivial_components = 0, leaves = 0, components = 0;
};

/// Union-find over the branching's arcs.
inline Recount recount(const Branching& b) {
  const auto n = b.host().vertex_count();
  std::vector<std::size_t> up(n);
  std::iota(up.begin(), up.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return up[x] == x ? x : up[x] = find(up[x]);
  };
  std::vector<std::size_t> outdeg(n, 0);
  for (const Arc& a : b.arcs()) {
    up[find(a.tail)] = find(a.head);
    ++outdeg[a.tail];
  }
  std::vector<std::size_t> size(n, 0);
  for (std::size_t v = 0; v < n; ++v) ++size[find(v)];
  Recount r;
  for (std::size_t v = 0; v < n; ++v) {
    if (outdeg[v] == 0) ++r.leaves;
    if (find(v) == v) {
      ++r.components;
      if (size[v] >= 2) {
        ++r.nontrivial_components;
        r.nontrivial_vertices += size[v];
      }
    }
  }
  return r;
}

/// Weight of out-degree-0 vertices, maximized over all parent functions by
/// plain mixed-radix enumeration.
inline std::int64_t enumerate_max_leaves(const Digraph& d, bool weighted = false) {
  const auto n = d.vertex_count();
  std::vector<VertexId> order;
  for (VertexId v = 0; v < n; ++v)
    if (v != d.root()) order.push_back(v);
  std::vector<std::size_t> digit(order.size(), 0);
  std::int64_t best = -1;
  for (;;) {
    std::vector<bool> internal(n, false);
    for (std::size_t i = 0; i < order.size(); ++i)
      internal[d.in_neighbors(order[i])[digit[i]]] = true;
    std::int64_t value = 0;
    for (VertexId v = 0; v < n; ++v)
      if (!internal[v]) value += weighted ? d.weight(v) : 1;
    best = std::max(best, value);
    std::size_t i = 0;
    while (i < order.size() && ++digit[i] == d.in_degree(order[i])) digit[i++] = 0;
    if (i == order.size()) break;
  }
  return best;
}

/// Largest set of vertices whose free-out-neighbor pairs are pairwise
/// disjoint, enumerating subsets of the 2-candidates of f directly.
inline std::size_t max_compatible_two_expansions(const Branching& f) {
  std::vector<std::vector<VertexId>> pairs;
  for (VertexId v = 0; v < f.host().vertex_count(); ++v) {
    if (f.out_degree(v) != 0) continue;
    std::vector<VertexId> free;
    for (auto w : f.host().out_neighbors(v))
      if (!f.has_parent(w)) free.push_back(w);
    if (free.size() == 2) pairs.push_back(free);
  }
  std::size_t best = 0;
  std::vector<int> used(f.host().vertex_count(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t taken) {
    if (taken + (pairs.size() - i) <= best) return;
    if (i == pairs.size()) {
      best = taken;
      return;
    }
    auto& p = pairs[i];
    if (!used[p[0]] && !used[p[1]]) {
      used[p[0]] = used[p[1]] = 1;
      rec(i + 1, taken + 1);
      used[p[0]] = used[p[1]] = 0;
    }
    rec(i + 1, taken);
  };
  rec(0, 0);
  return best;
}

inline UndirectedGraph petersen() {
  std::vector<Edge> e;
  for (VertexId i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);      // outer cycle
    e.emplace_back(i, i + 5);            // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return UndirectedGraph::make(10, std::move(e));
}

inline UndirectedGraph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return UndirectedGraph::make(n, std::move(e));
}

inline UndirectedGraph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId a = 0; a + 1 < n; ++a) e.emplace_back(a, a + 1);
  return UndirectedGraph::make(n, std::move(e));
}

inline Digraph star(std::size_t children) {
  std::vector<Arc> arcs;
  for (VertexId c = 1; c <= children; ++c) arcs.push_back({0, c});
  return Digraph(children + 1, 0, std::move(arcs));
}

inline Digraph path(std::size_t n) {
  std::vector<Arc> arcs;
  for (VertexId v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  return Digraph(n, 0, std::move(arcs));
}

inline Digraph diamond() { return Digraph(4, 0, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace leafy::oracle
