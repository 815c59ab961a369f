#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracles {

using caydis::CayleyGraph;
using caydis::Group;
using caydis::Permutation;

namespace {

bool preserves_edges(const CayleyGraph& graph, const std::vector<int>& img) {
  int n = graph.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (graph.adjacent(u, v) != graph.adjacent(img[u], img[v])) return false;
  return true;
}

template <typename Fn>
void partition_rec(std::vector<int>& a, int i, int used, Fn& fn) {
  int n = static_cast<int>(a.size());
  if (i == n) {
    fn(a, used);
    return;
  }
  for (int c = 0; c <= used; ++c) {
    a[i] = c;
    partition_rec(a, i + 1, std::max(used, c + 1), fn);
  }
}

/** Calls fn(parts, k) for every set partition, via restricted growth strings. */
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
  if (n == 0) return;
  std::vector<int> a(n, 0);
  partition_rec(a, 1, 1, fn);
}

bool partition_proper(const CayleyGraph& graph, const std::vector<int>& part) {
  int n = graph.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] == part[v] && graph.adjacent(u, v)) return false;
  return true;
}

bool partition_distinguishing(const std::vector<int>& part,
                              const std::vector<Permutation>& auts) {
  for (const Permutation& p : auts) {
    if (p.is_identity()) continue;
    bool preserved = true;
    for (int v = 0; v < p.degree(); ++v)
      if (part[p[v]] != part[v]) {
        preserved = false;
        break;
      }
    if (preserved) return false;
  }
  return true;
}

}  // namespace

std::vector<Permutation> brute_automorphisms(const CayleyGraph& graph) {
  int n = graph.vertex_count();
  if (n > 9) throw std::invalid_argument("brute automorphism oracle is for n <= 9");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> found;
  do {
    if (preserves_edges(graph, img)) found.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return found;
}

int brute_chromatic_number(const CayleyGraph& graph) {
  int best = graph.vertex_count();
  for_each_partition(graph.vertex_count(), [&](const std::vector<int>& part, int k) {
    if (k < best && partition_proper(graph, part)) best = k;
  });
  return best;
}

int brute_distinguishing_chromatic_number(const CayleyGraph& graph,
                                          const std::vector<Permutation>& auts) {
  int best = graph.vertex_count();
  for_each_partition(graph.vertex_count(), [&](const std::vector<int>& part, int k) {
    if (k < best && partition_proper(graph, part) &&
        partition_distinguishing(part, auts))
      best = k;
  });
  return best;
}

std::vector<std::vector<int>> brute_subgroups(const Group& group) {
  int n = group.order();
  if (n > 16) throw std::invalid_argument("brute subgroup oracle is for n <= 16");
  std::vector<std::vector<int>> found;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // must contain 0
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) members.push_back(x);
    bool closed = true;
    for (int a : members) {
      for (int b : members)
        if (!(mask & (1u << group.add(a, b)))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) found.push_back(std::move(members));
  }
  std::sort(found.begin(), found.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return found;
}

}  // namespace oracles
