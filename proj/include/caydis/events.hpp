#pragma once

#include <optional>
#include <vector>

#include "caydis/group.hpp"
#include "caydis/permutation.hpp"
#include "caydis/sampler.hpp"

namespace caydis {

/**
 * Witness for the coset-union event: proper subgroups H <= K < A, |H| > 1,
 * such that S \ K is a union of H-cosets, plus the counting data attached to
 * that pair:
 *   h = |H|, k = |K|, j = #involutions in K (identity included),
 *   i = #{a not in K : 2a in H}, l = #order-2 elements of H.
 */
struct CosetEventCensus {
  Subgroup h_group;
  Subgroup k_group;
  int h = 0;
  int k = 0;
  int j = 0;
  int i = 0;
  int l = 0;
};

/**
 * Scans subgroup pairs in (order, elements) order and returns the first
 * witness, or nullopt. The subgroup list must come from group.subgroups().
 */
std::optional<CosetEventCensus> coset_union_event(const Group& group,
                                                  const ConnectionSet& s,
                                                  const std::vector<Subgroup>& subgroups);
std::optional<CosetEventCensus> coset_union_event(const Group& group,
                                                  const ConnectionSet& s,
                                                  int cap = 200);

/**
 * First group automorphism outside {identity, negation} with phi(S) = S,
 * scanning the sorted automorphism list; nullopt if none.
 */
std::optional<Permutation> normalizer_event(const Group& group, const ConnectionSet& s,
                                            const std::vector<Permutation>& automorphisms);
std::optional<Permutation> normalizer_event(const Group& group, const ConnectionSet& s,
                                            int cap = 200);

/**
 * Whether (A, S) admits a compatible direct-factor pair: always false for
 * Type II groups; for Type I groups true iff A is cyclic and S is empty or
 * all of A \ {0}. Throws UnsupportedFamilyError for other families.
 */
bool good_pair_event(const Group& group, const ConnectionSet& s);

}  // namespace caydis
