#pragma once

#include <array>
#include <optional>
#include <vector>

#include "caydis/coloring.hpp"
#include "caydis/graph.hpp"
#include "caydis/group.hpp"
#include "caydis/rng.hpp"
#include "caydis/symmetry.hpp"

namespace caydis {

/**
 * Unordered triple {x, y, z} of distinct nonzero elements with x+y+z = 0,
 * stored ascending, together with its difference set
 * D = {+-(x-y), +-(y-z), +-(x-z)} (sorted, inverse-closed, 0 excluded).
 * The triple is independent in the graph iff D does not meet S.
 */
struct ZeroSumTriple {
  std::array<int, 3> elements{};
  std::vector<int> difference_set;
};

/** All zero-sum triples, ordered lexicographically by (x, y, z). */
std::vector<ZeroSumTriple> enumerate_zero_sum_triples(const Group& group);

/** First triple (enumeration order) whose difference set misses S. */
std::optional<ZeroSumTriple> find_independent_triple(const CayleyGraph& graph);
std::optional<ZeroSumTriple> find_independent_triple(
    const CayleyGraph& graph, const std::vector<ZeroSumTriple>& triples);

/** Count of triples whose difference set misses S. */
int count_independent_triples(const CayleyGraph& graph,
                              const std::vector<ZeroSumTriple>& triples);

/**
 * True iff no nontrivial map x -> +-x + g fixes the triple setwise.
 * Holds for every zero-sum triple when gcd(n, 6) = 1.
 */
bool verify_triple_rigidity(const Group& group, const ZeroSumTriple& triple);

struct DistinguishingVerdict {
  bool is_distinguishing = false;
  /** A nontrivial automorphism preserving every class, when one exists. */
  std::optional<Permutation> witness;
};

/** A coloring distinguishes iff only the identity fixes every color class. */
DistinguishingVerdict is_distinguishing(const Coloring& coloring,
                                        const AutomorphismGroup& aut);

struct ChiDResult {
  int chi_d = 0;
  Coloring witness;
};

/**
 * Least r admitting a proper coloring with at most r colors that the given
 * automorphism group cannot fix classwise. Backtracks over canonical color
 * assignments (first use of color c preceded by first use of c-1), pruning
 * improper prefixes. Throws ScaleError past the cap.
 */
ChiDResult distinguishing_chromatic_number_exact(const CayleyGraph& graph,
                                                 const AutomorphismGroup& aut,
                                                 int cap = 12);

struct Type1Certificate {
  ZeroSumTriple triple;
  int chi = 0;
  Coloring coloring;
  DistinguishingVerdict verdict;
};

/**
 * Colors the graph with exactly chi colors, then recolors an independent
 * zero-sum triple with one fresh color, preferring a triple that leaves
 * every base class nonempty so exactly chi+1 colors appear. When Aut(graph)
 * is the semidirect family, triple rigidity makes the result distinguishing.
 * Throws NoTripleFound when every triple meets S.
 */
Type1Certificate type1_distinguishing_coloring(const CayleyGraph& graph,
                                               const AutomorphismGroup& aut,
                                               int chi_cap = 40);

/** Variant reusing a precomputed base coloring and triple list. */
Type1Certificate type1_distinguishing_coloring(const CayleyGraph& graph,
                                               const AutomorphismGroup& aut,
                                               const ChromaticResult& base,
                                               const std::vector<ZeroSumTriple>& triples);

struct MotionBound {
  double f = 0.0;               // sum over elements of t^(orbits_on_class - |class|)
  int max_fixed_in_class = 0;   // largest fixed-point count of a nontrivial element
  double least_prime = 0.0;     // least prime dividing |G|; +inf for the trivial group
  bool criterion_met = false;   // f < least_prime (strict)
};

/**
 * Evaluates the random-splitting criterion for subdividing the class into t
 * parts. Pre: every element of g fixes the class setwise, t >= 1.
 */
MotionBound motion_bound(const AutomorphismGroup& g, const std::vector<int>& cls, int t);

/**
 * Repeatedly splits the class-color vertices uniformly at random into t
 * parts (part 0 keeps the old color, parts 1..t-1 take fresh colors) until
 * the coloring distinguishes or attempts run out. One uniform draw per class
 * vertex per attempt, vertices in ascending order. t = 1 returns the base
 * coloring iff it already distinguishes.
 */
std::optional<Coloring> motion_recolor(const CayleyGraph& graph, const Coloring& base,
                                       int class_color, int t,
                                       const AutomorphismGroup& aut,
                                       RandomStream& stream, int max_attempts);

struct ThresholdCheck {
  bool applies = false;   // chi < n / (m + 2*log2(2n))
  long long t = 0;        // ceil((2n)^(2*chi / (n - m*chi)))
};

/** Pre: n > m * chi, else std::invalid_argument. */
ThresholdCheck type2_threshold_check(long long n, long long m, long long chi);

}  // namespace caydis
