#pragma once

#include <vector>

#include "caydis/distinguishing.hpp"
#include "caydis/group.hpp"

namespace caydis::bounds {

// All logarithms here are base 2.

/** (p^c1 + (1-p)^c1)^c2. Symmetric in p <-> 1-p, minimized at p = 1/2. */
long double product_bound_core(long double p, long double c1, long double c2);

/** log2 of n^(log2 n) * core = (log2 n)^2 + c2 * log2(p^c1 + (1-p)^c1). */
long double product_bound_log2_value(long long n, long double p, long double c1,
                               long double c2);

/** n^(log2 n) * core, evaluated in log space (may overflow to +inf). */
long double product_bound_value(long long n, long double p, long double c1, long double c2);

/** Zero-sum triple count (n-1)(n-5)/6; requires gcd(n, 6) = 1. */
long long zero_sum_triple_count(long long n);

/** Expected independent-triple count |T| * q^3; requires gcd(n, 6) = 1. */
long double janson_mu(long long n, long double q);

/** Closed-form pair-correlation bound 3n|T|q^5 + |T|q^4 + |T|q^3. */
long double janson_delta_bound(long long n, long double q);

struct TailBound {
  bool applicable = false;
  long double value = 0.0L;
};

/** exp(-mu^2 / (2*delta)); applicable only when 0 < mu <= delta. */
TailBound janson_tail(long double mu, long double delta);

/**
 * Two-term Chernoff bound on P(|S| >= (n-1)p + 3t) for |S| = X' + 2X'',
 * X' ~ Bin(m-1, p), X'' ~ Bin((n-m)/2, p):
 *   exp(-t^2 / (2((m-1)p + t/3))) + exp(-t^2 / (2((n-m)/2 p + t/3))).
 * Pre: t > 0.
 */
long double chernoff_size_tail(long long n, long long m, long double p, long double t);

/** The reference split scale t = 2n / (13 (m + 2 log2(2n))). */
long double reference_size_tail_t(long long n, long long m);

/** Per-triple counts of other triples by difference-set overlap size. */
struct OverlapRow {
  int triple = 0;        // index into the triple list
  int count2 = 0;
  int count4 = 0;
  int count6 = 0;
  int partner6 = -1;     // the unique overlap-6 partner when count6 == 1
};

struct OverlapCensus {
  std::vector<OverlapRow> rows;
  long long ordered_pairs = 0;  // ordered (T, U), T != U, overlapping
};

/** Brute-force census over all ordered triple pairs. Pre: gcd(n, 6) = 1. */
OverlapCensus overlap_census(const Group& group,
                             const std::vector<ZeroSumTriple>& triples);

/**
 * Exact pair-correlation sum: over ordered overlapping pairs (T, U), T != U,
 * q^(|D(T) u D(U)| / 2). Below janson_delta_bound at moderate q; the closed
 * form under-counts overlap-4 pairs and over-counts overlap-2 pairs, so the
 * comparison can invert for q near 0 (n = 25: crossover at q = 9/64).
 */
long double delta_exact(const Group& group,
                        const std::vector<ZeroSumTriple>& triples, long double q);

}  // namespace caydis::bounds
