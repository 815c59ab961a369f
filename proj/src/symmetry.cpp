#include "caydis/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "caydis/errors.hpp"

namespace caydis {

AutomorphismGroup::AutomorphismGroup(std::vector<Permutation> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || !elements_.front().is_identity())
    throw std::invalid_argument("automorphism list must contain the identity");
}

bool AutomorphismGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<Permutation> AutomorphismGroup::generators() const {
  std::vector<Permutation> gens;
  std::set<Permutation> closure;
  closure.insert(Permutation::identity(degree()));
  for (const Permutation& g : elements_) {
    if (closure.count(g)) continue;
    gens.push_back(g);
    // Rebuild closure with the new generator.
    std::vector<Permutation> frontier(closure.begin(), closure.end());
    std::vector<Permutation> next;
    next.push_back(g);
    while (!next.empty()) {
      std::vector<Permutation> added;
      for (const Permutation& x : next)
        if (closure.insert(x).second)
          for (const Permutation& h : gens) {
            Permutation y = h * x;
            if (!closure.count(y)) added.push_back(y);
            Permutation z = x * h;
            if (!closure.count(z)) added.push_back(z);
          }
      next = std::move(added);
    }
    if (closure.size() == elements_.size()) break;
  }
  return gens;
}

bool AutomorphismGroup::verify_group_axioms() const {
  if (elements_.empty() || !contains(Permutation::identity(degree()))) return false;
  for (const Permutation& a : elements_) {
    if (!contains(a.inverse())) return false;
    for (const Permutation& b : elements_)
      if (!contains(a * b)) return false;
  }
  return true;
}

AutomorphismGroup semidirect_elements(const Group& group) {
  int n = group.order();
  std::vector<Permutation> elems;
  elems.reserve(2 * n);
  for (int g = 0; g < n; ++g) {
    std::vector<int> plus(n), minus(n);
    for (int x = 0; x < n; ++x) {
      plus[x] = group.add(x, g);
      minus[x] = group.add(group.neg(x), g);
    }
    elems.emplace_back(std::move(plus));
    elems.emplace_back(std::move(minus));
  }
  return AutomorphismGroup(std::move(elems));
}

namespace {

/**
 * Individualization-refinement search over the source/target partition pair.
 *
 * Invariants:
 *  - colors_a / colors_b always have identical cell-size-by-color shape;
 *    color c on the source side corresponds to color c on the target side.
 *  - refinement signatures are (old color, neighbor count per old color),
 *    re-identified by sorted rank, so corresponding cells keep matching ids.
 *  - the source individualization sequence depends only on depth, hence every
 *    automorphism appears at exactly one discrete leaf.
 */
class AutSearch {
 public:
  AutSearch(const std::vector<Bitset>& rows, const AutLimits& limits)
      : rows_(rows), n_(static_cast<int>(rows.size())), limits_(limits) {}

  std::vector<Permutation> run() {
    std::vector<int> init(n_, 0);
    descend(init, init, 1);
    return std::move(found_);
  }

 private:
  using Signature = std::vector<int>;

  // One refinement pass per side; false on shape mismatch (prunes branch).
  bool refine_lockstep(std::vector<int>& ca, std::vector<int>& cb, int& k) const {
    while (true) {
      std::vector<Signature> sig_a = signatures(ca, k);
      std::vector<Signature> sig_b = signatures(cb, k);
      std::vector<Signature> sorted_a = sig_a;
      std::vector<Signature> sorted_b = sig_b;
      std::sort(sorted_a.begin(), sorted_a.end());
      std::sort(sorted_b.begin(), sorted_b.end());
      if (sorted_a != sorted_b) return false;
      sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
      int next_k = static_cast<int>(sorted_a.size());
      for (int v = 0; v < n_; ++v) {
        ca[v] = static_cast<int>(
            std::lower_bound(sorted_a.begin(), sorted_a.end(), sig_a[v]) - sorted_a.begin());
        cb[v] = static_cast<int>(
            std::lower_bound(sorted_a.begin(), sorted_a.end(), sig_b[v]) - sorted_a.begin());
      }
      if (next_k == k) return true;  // partition stable
      k = next_k;
    }
  }

  std::vector<Signature> signatures(const std::vector<int>& colors, int k) const {
    std::vector<Signature> sigs(n_);
    for (int v = 0; v < n_; ++v) {
      Signature s(k + 1, 0);
      s[0] = colors[v];
      const Bitset& row = rows_[v];
      for (int u = row.next_set(0); u < n_; u = row.next_set(u + 1)) ++s[1 + colors[u]];
      sigs[v] = std::move(s);
    }
    return sigs;
  }

  void descend(std::vector<int> ca, std::vector<int> cb, int k) {
    if (++nodes_ > limits_.max_nodes)
      throw ScaleError("automorphism search exceeded node budget");
    if (!refine_lockstep(ca, cb, k)) return;
    if (k == n_) {
      emit_leaf(ca, cb);
      return;
    }
    // First non-singleton cell; cells are ordered by color id.
    std::vector<int> count(k, 0);
    for (int v = 0; v < n_; ++v) ++count[ca[v]];
    int cell = 0;
    while (count[cell] == 1) ++cell;
    int v_star = 0;
    while (ca[v_star] != cell) ++v_star;
    for (int w = 0; w < n_; ++w) {
      if (cb[w] != cell) continue;
      std::vector<int> ca2 = ca, cb2 = cb;
      ca2[v_star] = k;
      cb2[w] = k;
      descend(std::move(ca2), std::move(cb2), k + 1);
    }
  }

  void emit_leaf(const std::vector<int>& ca, const std::vector<int>& cb) {
    std::vector<int> by_color(n_), img(n_);
    for (int v = 0; v < n_; ++v) by_color[ca[v]] = v;
    for (int w = 0; w < n_; ++w) img[by_color[cb[w]]] = w;
    // Candidate from the refinement only; verify edges before recording.
    for (int v = 0; v < n_; ++v) {
      const Bitset& row = rows_[v];
      for (int u = row.next_set(0); u < n_; u = row.next_set(u + 1))
        if (!rows_[img[v]].test(img[u])) return;
    }
    found_.emplace_back(std::move(img));
    if (found_.size() > limits_.max_elements)
      throw ScaleError("automorphism group exceeds element budget");
  }

  const std::vector<Bitset>& rows_;
  int n_;
  AutLimits limits_;
  std::uint64_t nodes_ = 0;
  std::vector<Permutation> found_;
};

}  // namespace

AutomorphismGroup compute_automorphism_group(const CayleyGraph& graph,
                                             const AutLimits& limits) {
  if (graph.vertex_count() > limits.max_vertices)
    throw ScaleError("graph exceeds automorphism search vertex cap");
  AutSearch search(graph.rows(), limits);
  return AutomorphismGroup(search.run());
}

bool is_small(const CayleyGraph& graph, const AutomorphismGroup& aut) {
  return aut.order() == semidirect_elements(graph.group()).order();
}

AutomorphismGroup stabilizer_of_class(const AutomorphismGroup& aut,
                                      const std::vector<int>& cls) {
  std::vector<char> member(aut.degree(), 0);
  for (int v : cls) member[v] = 1;
  std::vector<Permutation> kept;
  for (const Permutation& p : aut.elements()) {
    bool ok = true;
    for (int v : cls)
      if (!member[p[v]]) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(p);
  }
  return AutomorphismGroup(std::move(kept));
}

AutomorphismGroup stabilizer_of_partition(const AutomorphismGroup& aut,
                                          const Coloring& coloring) {
  std::vector<Permutation> kept;
  for (const Permutation& p : aut.elements()) {
    bool ok = true;
    for (int v = 0; v < coloring.size(); ++v)
      if (coloring.colors[p[v]] != coloring.colors[v]) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(p);
  }
  return AutomorphismGroup(std::move(kept));
}

}  // namespace caydis
