#include "caydis/distinguishing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "caydis/errors.hpp"

namespace caydis {

std::vector<ZeroSumTriple> enumerate_zero_sum_triples(const Group& group) {
  int n = group.order();
  std::vector<ZeroSumTriple> out;
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int z = group.neg(group.add(x, y));
      if (z <= y) continue;  // require x < y < z; also drops z in {0, x, y}
      ZeroSumTriple t;
      t.elements = {x, y, z};
      int d[3] = {group.sub(x, y), group.sub(y, z), group.sub(x, z)};
      for (int v : d) {
        t.difference_set.push_back(v);
        t.difference_set.push_back(group.neg(v));
      }
      std::sort(t.difference_set.begin(), t.difference_set.end());
      t.difference_set.erase(
          std::unique(t.difference_set.begin(), t.difference_set.end()),
          t.difference_set.end());
      out.push_back(std::move(t));
    }
  return out;
}

namespace {

bool triple_is_independent(const CayleyGraph& graph, const ZeroSumTriple& t) {
  for (int d : t.difference_set)
    if (graph.connection_bits().test(d)) return false;
  return true;
}

}  // namespace

std::optional<ZeroSumTriple> find_independent_triple(
    const CayleyGraph& graph, const std::vector<ZeroSumTriple>& triples) {
  for (const ZeroSumTriple& t : triples)
    if (triple_is_independent(graph, t)) return t;
  return std::nullopt;
}

std::optional<ZeroSumTriple> find_independent_triple(const CayleyGraph& graph) {
  return find_independent_triple(graph, enumerate_zero_sum_triples(graph.group()));
}

int count_independent_triples(const CayleyGraph& graph,
                              const std::vector<ZeroSumTriple>& triples) {
  int count = 0;
  for (const ZeroSumTriple& t : triples)
    if (triple_is_independent(graph, t)) ++count;
  return count;
}

bool verify_triple_rigidity(const Group& group, const ZeroSumTriple& triple) {
  const auto& [x, y, z] = triple.elements;
  auto fixes_triple = [&](int a, int b, int c) {
    int lo = std::min({a, b, c}), hi = std::max({a, b, c});
    int mid = a + b + c - lo - hi;
    return lo == x && mid == y && hi == z;
  };
  bool negation_trivial = group.involution_count() == group.order();
  for (int g = 0; g < group.order(); ++g) {
    // x -> x + g, nontrivial for g != 0
    if (g != 0 &&
        fixes_triple(group.add(x, g), group.add(y, g), group.add(z, g)))
      return false;
    // x -> -x + g; the identity only when g = 0 and negation is trivial
    if (g == 0 && negation_trivial) continue;
    if (fixes_triple(group.add(group.neg(x), g), group.add(group.neg(y), g),
                     group.add(group.neg(z), g)))
      return false;
  }
  return true;
}

DistinguishingVerdict is_distinguishing(const Coloring& coloring,
                                        const AutomorphismGroup& aut) {
  if (coloring.size() != aut.degree())
    throw std::invalid_argument("coloring and automorphism group degree mismatch");
  for (const Permutation& p : aut.elements()) {
    if (p.is_identity()) continue;
    bool fixes_all = true;
    for (int v = 0; v < coloring.size(); ++v)
      if (coloring.colors[p[v]] != coloring.colors[v]) {
        fixes_all = false;
        break;
      }
    if (fixes_all) return DistinguishingVerdict{false, p};
  }
  return DistinguishingVerdict{true, std::nullopt};
}

namespace {

/** Canonical (first-use ordered) proper colorings with exactly r colors. */
class ChiDSearch {
 public:
  ChiDSearch(const CayleyGraph& g, const AutomorphismGroup& aut, int r)
      : g_(g), aut_(aut), r_(r), colors_(g.vertex_count(), -1) {}

  std::optional<Coloring> run() {
    if (descend(0, 0)) return Coloring::from_colors(colors_);
    return std::nullopt;
  }

 private:
  bool descend(int v, int used) {
    int n = g_.vertex_count();
    if (v == n) {
      if (used < r_) return false;  // tested at a smaller r already
      Coloring c = Coloring::from_colors(colors_);
      return is_distinguishing(c, aut_).is_distinguishing;
    }
    int limit = std::min(used, r_ - 1);  // color `used` introduces a new class
    for (int c = 0; c <= limit; ++c) {
      bool clash = false;
      const Bitset& row = g_.neighbors(v);
      for (int u = row.next_set(0); u < v; u = row.next_set(u + 1))
        if (colors_[u] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colors_[v] = c;
      if (descend(v + 1, std::max(used, c + 1))) return true;
    }
    colors_[v] = -1;
    return false;
  }

  const CayleyGraph& g_;
  const AutomorphismGroup& aut_;
  int r_;
  std::vector<int> colors_;
};

}  // namespace

ChiDResult distinguishing_chromatic_number_exact(const CayleyGraph& graph,
                                                 const AutomorphismGroup& aut,
                                                 int cap) {
  if (graph.vertex_count() > cap)
    throw ScaleError("graph exceeds exact distinguishing chromatic number cap");
  int chi = chromatic_number_exact(graph, cap).chi;
  for (int r = chi;; ++r) {
    ChiDSearch search(graph, aut, r);
    if (auto witness = search.run()) return ChiDResult{r, std::move(*witness)};
    // r = n always succeeds: all-distinct colors pin every vertex.
  }
}

Type1Certificate type1_distinguishing_coloring(const CayleyGraph& graph,
                                               const AutomorphismGroup& aut,
                                               const ChromaticResult& base,
                                               const std::vector<ZeroSumTriple>& triples) {
  std::vector<int> class_size(base.witness.k, 0);
  for (int c : base.witness.colors) ++class_size[c];
  // Prefer an independent triple that leaves every base class nonempty, so
  // the recoloring uses exactly chi + 1 colors; a triple containing a whole
  // class would collapse the count back to chi. The first independent
  // triple is the fallback when every one of them swallows a class.
  const ZeroSumTriple* chosen = nullptr;
  for (const ZeroSumTriple& t : triples) {
    if (!triple_is_independent(graph, t)) continue;
    if (!chosen) chosen = &t;
    bool collapses = false;
    for (int i = 0; i < 3 && !collapses; ++i) {
      int same = 0;
      for (int j = 0; j < 3; ++j)
        if (base.witness.colors[t.elements[j]] ==
            base.witness.colors[t.elements[i]])
          ++same;
      if (same == class_size[base.witness.colors[t.elements[i]]]) collapses = true;
    }
    if (!collapses) {
      chosen = &t;
      break;
    }
  }
  if (!chosen) throw NoTripleFound();
  Type1Certificate cert;
  cert.triple = *chosen;
  cert.chi = base.chi;
  std::vector<int> colors = base.witness.colors;
  for (int v : chosen->elements) colors[v] = base.witness.k;
  cert.coloring = Coloring::from_colors(std::move(colors));
  cert.verdict = is_distinguishing(cert.coloring, aut);
  return cert;
}

Type1Certificate type1_distinguishing_coloring(const CayleyGraph& graph,
                                               const AutomorphismGroup& aut,
                                               int chi_cap) {
  return type1_distinguishing_coloring(graph, aut,
                                       chromatic_number_exact(graph, chi_cap),
                                       enumerate_zero_sum_triples(graph.group()));
}

MotionBound motion_bound(const AutomorphismGroup& g, const std::vector<int>& cls, int t) {
  if (t < 1) throw std::invalid_argument("split arity t must be >= 1");
  MotionBound out;
  int c1 = static_cast<int>(cls.size());
  std::vector<char> member(g.degree(), 0);
  for (int v : cls) member[v] = 1;
  for (const Permutation& p : g.elements()) {
    int orbits = orbit_count_on_class(p, cls);  // throws if class not invariant
    out.f += std::pow(static_cast<double>(t), static_cast<double>(orbits - c1));
    if (!p.is_identity()) {
      int fixed = 0;
      for (int v : cls)
        if (p[v] == v) ++fixed;
      out.max_fixed_in_class = std::max(out.max_fixed_in_class, fixed);
    }
  }
  if (g.order() == 1) {
    out.least_prime = std::numeric_limits<double>::infinity();
  } else {
    std::uint64_t order = g.order();
    std::uint64_t p = 2;
    while (order % p != 0) ++p;
    out.least_prime = static_cast<double>(p);
  }
  out.criterion_met = out.f < out.least_prime;
  return out;
}

std::optional<Coloring> motion_recolor(const CayleyGraph& graph, const Coloring& base,
                                       int class_color, int t,
                                       const AutomorphismGroup& aut,
                                       RandomStream& stream, int max_attempts) {
  if (t < 1) throw std::invalid_argument("split arity t must be >= 1");
  if (class_color < 0 || class_color >= base.k)
    throw std::invalid_argument("class color out of range");
  if (base.size() != graph.vertex_count())
    throw std::invalid_argument("base coloring does not cover the vertex set");
  if (t == 1) {
    if (is_distinguishing(base, aut).is_distinguishing) return base;
    return std::nullopt;
  }
  std::vector<int> cls;
  for (int v = 0; v < base.size(); ++v)
    if (base.colors[v] == class_color) cls.push_back(v);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<int> colors = base.colors;
    for (int v : cls) {
      int part = stream.next_below(t);
      if (part > 0) colors[v] = base.k - 1 + part;
    }
    Coloring candidate = Coloring::from_colors(std::move(colors));
    if (is_distinguishing(candidate, aut).is_distinguishing) return candidate;
  }
  return std::nullopt;
}

ThresholdCheck type2_threshold_check(long long n, long long m, long long chi) {
  if (n <= 0 || m <= 0 || chi <= 0)
    throw std::invalid_argument("n, m, chi must be positive");
  if (n <= m * chi)
    throw std::invalid_argument("threshold check requires n > m * chi");
  ThresholdCheck out;
  long double nn = static_cast<long double>(n);
  out.applies =
      static_cast<long double>(chi) < nn / (m + 2.0L * std::log2(2.0L * nn));
  long double exponent =
      2.0L * chi / (static_cast<long double>(n) - static_cast<long double>(m) * chi);
  out.t = static_cast<long long>(std::ceil(std::pow(2.0L * nn, exponent)));
  return out;
}

}  // namespace caydis
