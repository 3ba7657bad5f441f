#include "leafy/matching.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "leafy/errors.hpp"

namespace leafy {

namespace {

constexpr int kNil = -1;

// Augmenting-path search with blossom contraction via base labels.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const UndirectedGraph& g)
      : n_(static_cast<int>(g.vertex_count)), mate_(n_, kNil), pred_(n_), base_(n_),
        in_tree_(n_), in_blossom_(n_), on_path_(n_) {
    for (const auto& list : g.adjacency()) adj_.emplace_back(list.begin(), list.end());
  }

  std::vector<Edge> run() {
    // Greedy warm start in ascending order.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != kNil) continue;
      for (int w : adj_[v]) {
        if (mate_[w] == kNil) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != kNil || adj_[v].empty()) continue;
      int end = find_augmenting_path(v);
      while (end != kNil) {
        int prev = pred_[end];
        int next = mate_[prev];
        mate_[end] = prev;
        mate_[prev] = end;
        end = next;
      }
    }
    std::vector<Edge> result;
    for (int v = 0; v < n_; ++v)
      if (mate_[v] > v) result.emplace_back(v, mate_[v]);
    return result;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::fill(on_path_.begin(), on_path_.end(), false);
    for (;;) {
      a = base_[a];
      on_path_[a] = true;
      if (mate_[a] == kNil) break;
      a = pred_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path_[b]) return b;
      b = pred_[mate_[b]];
    }
  }

  void mark_blossom_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = true;
      pred_[v] = child;
      child = mate_[v];
      v = pred_[mate_[v]];
    }
  }

  // Returns the free endpoint of an augmenting path from root, or kNil.
  int find_augmenting_path(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), false);
    std::fill(pred_.begin(), pred_.end(), kNil);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    in_tree_[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNil && pred_[mate_[to]] != kNil)) {
          // Odd cycle: contract it.
          int b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_blossom_path(v, b, to);
          mark_blossom_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!in_tree_[i]) {
              in_tree_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (pred_[to] == kNil) {
          pred_[to] = v;
          if (mate_[to] == kNil) return to;
          int next = mate_[to];
          in_tree_[next] = true;
          queue.push_back(next);
        }
      }
    }
    return kNil;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, pred_, base_;
  std::vector<bool> in_tree_, in_blossom_, on_path_;
};

}  // namespace

std::vector<Edge> max_matching(const UndirectedGraph& g) { return BlossomMatcher(g).run(); }

std::vector<Edge> brute_force_matching(const UndirectedGraph& g) {
  if (g.edges.size() > kBruteForceMatchingMaxEdges)
    throw TooLarge("brute-force matching limited to " +
                   std::to_string(kBruteForceMatchingMaxEdges) + " edges, got " +
                   std::to_string(g.edges.size()));
  std::vector<bool> used(g.vertex_count, false);
  std::vector<Edge> current, best;
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (current.size() + (g.edges.size() - i) <= best.size()) return;
    if (i == g.edges.size()) {
      best = current;
      return;
    }
    auto [a, b] = g.edges[i];
    if (!used[a] && !used[b]) {
      used[a] = used[b] = true;
      current.push_back(g.edges[i]);
      self(self, i + 1);
      current.pop_back();
      used[a] = used[b] = false;
    }
    self(self, i + 1);
  };
  search(search, 0);
  std::sort(best.begin(), best.end());
  return best;
}

bool is_matching(const UndirectedGraph& g, const std::vector<Edge>& m) {
  std::vector<Edge> edges = g.edges;
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  std::vector<bool> used(g.vertex_count, false);
  for (auto [a, b] : m) {
    if (a > b) std::swap(a, b);
    if (a >= g.vertex_count || b >= g.vertex_count) return false;
    if (!std::binary_search(edges.begin(), edges.end(), Edge{a, b})) return false;
    if (used[a] || used[b]) return false;
    used[a] = used[b] = true;
  }
  return true;
}

}  // namespace leafy
