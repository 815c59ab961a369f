#pragma once

#include <cstdint>
#include <vector>

#include "caydis/coloring.hpp"
#include "caydis/graph.hpp"
#include "caydis/group.hpp"
#include "caydis/permutation.hpp"

namespace caydis {

/**
 * A set of graph automorphisms closed under the group operations, stored as
 * the full sorted element list. Desk-scale groups stay small, so explicit
 * listings are affordable and keep later scans (stabilizers, verdicts,
 * motion sums) trivially exact.
 */
class AutomorphismGroup {
 public:
  AutomorphismGroup() = default;
  /** Sorts and dedups; requires the identity to be present. */
  explicit AutomorphismGroup(std::vector<Permutation> elements);

  int degree() const { return elements_.empty() ? 0 : elements_.front().degree(); }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;

  /** Greedy generating set (first elements that enlarge the closure). */
  std::vector<Permutation> generators() const;
  /** Closure/identity/inverse check, O(|G|^2); meant for tests. */
  bool verify_group_axioms() const;

 private:
  std::vector<Permutation> elements_;
};

/**
 * The always-present symmetries x -> x + g and x -> -x + g, deduplicated:
 * order 2n in general, n when every element is an involution.
 */
AutomorphismGroup semidirect_elements(const Group& group);

struct AutLimits {
  int max_vertices = 64;
  std::uint64_t max_elements = 1'000'000;
  std::uint64_t max_nodes = 100'000'000;
};

/**
 * Exact automorphism group of the graph via individualization-refinement:
 * lockstep 1-dimensional color refinement on a source/target partition pair,
 * individualizing the first vertex of the first non-singleton cell against
 * every target candidate in index order. Every discrete leaf is verified
 * edge-by-edge before being recorded, so the output is exactly Aut(graph).
 * Deterministic element order (sorted). Throws ScaleError past the limits.
 */
AutomorphismGroup compute_automorphism_group(const CayleyGraph& graph,
                                             const AutLimits& limits = {});

/** |Aut| equals the semidirect order (containment always holds). */
bool is_small(const CayleyGraph& graph, const AutomorphismGroup& aut);

/** Elements mapping the given vertex class onto itself setwise. */
AutomorphismGroup stabilizer_of_class(const AutomorphismGroup& aut,
                                      const std::vector<int>& cls);

/** Elements mapping every color class onto itself setwise. */
AutomorphismGroup stabilizer_of_partition(const AutomorphismGroup& aut,
                                          const Coloring& coloring);

}  // namespace caydis
