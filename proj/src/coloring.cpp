#include "caydis/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "caydis/errors.hpp"

namespace caydis {

Coloring Coloring::from_colors(std::vector<int> raw) {
  std::vector<int> used(raw);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  if (!used.empty() && used.front() < 0)
    throw std::invalid_argument("negative color label");
  Coloring c;
  c.k = static_cast<int>(used.size());
  c.colors = std::move(raw);
  for (int& col : c.colors)
    col = static_cast<int>(std::lower_bound(used.begin(), used.end(), col) - used.begin());
  return c;
}

std::vector<std::vector<int>> Coloring::classes() const {
  std::vector<std::vector<int>> out(k);
  for (int v = 0; v < size(); ++v) out[colors[v]].push_back(v);
  return out;
}

bool is_proper(const CayleyGraph& graph, const Coloring& coloring) {
  if (coloring.size() != graph.vertex_count())
    throw std::invalid_argument("coloring does not cover the vertex set");
  int n = graph.vertex_count();
  for (int u = 0; u < n; ++u) {
    const Bitset& row = graph.neighbors(u);
    for (int v = row.next_set(u + 1); v < n; v = row.next_set(v + 1))
      if (coloring.colors[u] == coloring.colors[v]) return false;
  }
  return true;
}

namespace {

int lowest_free_color(const CayleyGraph& g, const std::vector<int>& colors, int v) {
  std::vector<char> blocked;
  const Bitset& row = g.neighbors(v);
  int n = g.vertex_count();
  for (int u = row.next_set(0); u < n; u = row.next_set(u + 1)) {
    if (colors[u] < 0) continue;
    if (colors[u] >= static_cast<int>(blocked.size())) blocked.resize(colors[u] + 1, 0);
    blocked[colors[u]] = 1;
  }
  int c = 0;
  while (c < static_cast<int>(blocked.size()) && blocked[c]) ++c;
  return c;
}

}  // namespace

Coloring greedy_coloring(const CayleyGraph& graph, GreedyStrategy strategy) {
  int n = graph.vertex_count();
  std::vector<int> colors(n, -1);
  if (strategy == GreedyStrategy::IndexOrder) {
    for (int v = 0; v < n; ++v) colors[v] = lowest_free_color(graph, colors, v);
  } else {
    std::vector<Bitset> neighbor_colors(n, Bitset(n + 1));
    for (int step = 0; step < n; ++step) {
      // Most saturated uncolored vertex; ties by degree are moot (regular),
      // final tie by index.
      int best = -1, best_sat = -1;
      for (int v = 0; v < n; ++v) {
        if (colors[v] >= 0) continue;
        int sat = neighbor_colors[v].count();
        if (sat > best_sat) {
          best_sat = sat;
          best = v;
        }
      }
      int c = lowest_free_color(graph, colors, best);
      colors[best] = c;
      const Bitset& row = graph.neighbors(best);
      for (int u = row.next_set(0); u < n; u = row.next_set(u + 1))
        neighbor_colors[u].set(c);
    }
  }
  return Coloring::from_colors(std::move(colors));
}

std::vector<int> greedy_clique(const CayleyGraph& graph) {
  int n = graph.vertex_count();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  // Regular graphs make degree sorting a no-op; keep it for generality.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return graph.neighbors(a).count() > graph.neighbors(b).count();
  });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (!graph.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

namespace {

/** Backtracking k-colorability with canonical new-color introduction. */
class KColorSearch {
 public:
  KColorSearch(const CayleyGraph& g, int k) : g_(g), k_(k), colors_(g.vertex_count(), -1) {}

  bool run(const std::vector<int>& clique, std::vector<int>& out) {
    if (static_cast<int>(clique.size()) > k_) return false;
    max_used_ = -1;
    for (int i = 0; i < static_cast<int>(clique.size()); ++i) {
      colors_[clique[i]] = i;
      max_used_ = i;
    }
    if (!descend(static_cast<int>(clique.size()))) return false;
    out = colors_;
    return true;
  }

 private:
  bool descend(int colored) {
    int n = g_.vertex_count();
    if (colored == n) return true;
    // Saturation order, ties by index.
    int best = -1, best_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (colors_[v] >= 0) continue;
      int sat = saturation(v);
      if (sat > best_sat) {
        best_sat = sat;
        best = v;
      }
    }
    std::vector<char> blocked(k_, 0);
    const Bitset& row = g_.neighbors(best);
    for (int u = row.next_set(0); u < n; u = row.next_set(u + 1))
      if (colors_[u] >= 0) blocked[colors_[u]] = 1;
    // Colors beyond max_used_ + 1 are interchangeable with it: skip them.
    int limit = std::min(k_ - 1, max_used_ + 1);
    for (int c = 0; c <= limit; ++c) {
      if (blocked[c]) continue;
      int saved = max_used_;
      colors_[best] = c;
      max_used_ = std::max(max_used_, c);
      if (descend(colored + 1)) return true;
      colors_[best] = -1;
      max_used_ = saved;
    }
    return false;
  }

  int saturation(int v) const {
    std::vector<char> seen(k_ + 1, 0);
    int n = g_.vertex_count();
    int sat = 0;
    const Bitset& row = g_.neighbors(v);
    for (int u = row.next_set(0); u < n; u = row.next_set(u + 1))
      if (colors_[u] >= 0 && !seen[colors_[u]]) {
        seen[colors_[u]] = 1;
        ++sat;
      }
    return sat;
  }

  const CayleyGraph& g_;
  int k_;
  std::vector<int> colors_;
  int max_used_ = -1;
};

}  // namespace

ChromaticResult chromatic_number_exact(const CayleyGraph& graph, int cap) {
  if (graph.vertex_count() > cap)
    throw ScaleError("graph exceeds exact chromatic number cap");
  Coloring upper = greedy_coloring(graph, GreedyStrategy::Saturation);
  std::vector<int> clique = greedy_clique(graph);
  int lb = std::max<int>(1, static_cast<int>(clique.size()));
  for (int k = lb; k < upper.k; ++k) {
    KColorSearch search(graph, k);
    std::vector<int> colors;
    if (search.run(clique, colors))
      return ChromaticResult{k, Coloring::from_colors(std::move(colors))};
  }
  return ChromaticResult{upper.k, upper};
}

}  // namespace caydis
