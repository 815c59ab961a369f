#pragma once

// Definition-level brute-force oracles, deliberately independent of the
// library's search code. Everything here is exponential and only meant for
// tiny instances (n <= 8 or so).

#include <vector>

#include "caydis/graph.hpp"
#include "caydis/group.hpp"
#include "caydis/permutation.hpp"

namespace oracles {

/** All edge-preserving permutations, by scanning every one of the n!. */
std::vector<caydis::Permutation> brute_automorphisms(const caydis::CayleyGraph& graph);

/** Minimum class count over all set partitions with independent classes. */
int brute_chromatic_number(const caydis::CayleyGraph& graph);

/**
 * Minimum class count over all set partitions that are proper and that no
 * nontrivial automorphism in `auts` preserves classwise.
 */
int brute_distinguishing_chromatic_number(const caydis::CayleyGraph& graph,
                                          const std::vector<caydis::Permutation>& auts);

/** All subgroups, by scanning every subset containing 0 for closure. */
std::vector<std::vector<int>> brute_subgroups(const caydis::Group& group);

}  // namespace oracles
