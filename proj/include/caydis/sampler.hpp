#pragma once

#include <vector>

#include "caydis/bitset.hpp"
#include "caydis/group.hpp"
#include "caydis/rng.hpp"

namespace caydis {

/**
 * Inverse-closed connection set without the identity, over the group whose
 * factors are echoed in `factors`. Members are sorted element indices.
 * p records the sampling probability, or -1 for explicitly supplied sets.
 */
struct ConnectionSet {
  std::vector<int> factors;
  std::vector<int> members;
  double p = -1.0;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int index) const;
  Bitset member_bits(int n) const;
};

/** |S| = x_prime + 2 * x_double_prime: involutions kept and pairs kept. */
struct SizeDecomposition {
  int x_prime = 0;
  int x_double_prime = 0;
};

/**
 * One Bernoulli(p) draw per order-2 element and one per {x, -x} pair,
 * consumed in ascending order of the canonical representative (the order-2
 * element itself, or min(x, -x)). A kept pair contributes both members, so
 * the result is inverse-closed by construction and never contains 0.
 * Throws std::invalid_argument unless 0 <= p <= 1.
 */
ConnectionSet sample_connection_set(const Group& group, double p, RandomStream& stream);

/** Number of Bernoulli draws per sample: (m - 1) + (n - m) / 2. */
long long trial_count(const Group& group);

SizeDecomposition decompose(const Group& group, const ConnectionSet& s);

/**
 * Wraps an explicit member list as a ConnectionSet, validating that it is
 * sorted-normalizable, within range, inverse-closed, and excludes 0.
 */
ConnectionSet connection_set_from_members(const Group& group, std::vector<int> members);

}  // namespace caydis
