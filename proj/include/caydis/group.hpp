#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "caydis/permutation.hpp"

namespace caydis {

/**
 * Group families the certificate pipelines discriminate on.
 *
 * TypeI:  gcd(n, 6) = 1.
 * TypeII: isomorphic to Z_2^r x N with N of odd order and non-cyclic
 *         (and not already TypeI).
 * Other:  everything else.
 */
enum class Family { TypeI, TypeII, Other };

const char* family_name(Family f);

/** Group element as a coordinate tuple plus its canonical index. */
struct Element {
  std::vector<int> coords;
  int index = 0;
};

/** Subgroup given by its sorted element indices (always contains 0). */
struct Subgroup {
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int index) const;
};

/**
 * Finite abelian group Z_{d_1} x ... x Z_{d_k}, factors as given (d_i >= 2,
 * not necessarily invariant factors). Elements are identified by their
 * canonical index: the rank of the coordinate tuple in lexicographic order,
 * so index 0 is the identity and for a single factor the index equals the
 * element value.
 *
 * Negation and element orders are precomputed; addition works on the cached
 * coordinate table. All desk-scale hot paths use the int index overloads.
 */
class Group {
 public:
  explicit Group(std::vector<int> factors);

  /** Parses a factor list like "2,2,9". Throws std::invalid_argument. */
  static Group parse(std::string_view text);

  const std::vector<int>& factors() const { return factors_; }
  std::string spec_string() const;
  int order() const { return n_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  Family family() const { return family_; }
  /** True iff the factors are pairwise coprime. */
  bool is_cyclic() const;

  Element element(int index) const;
  /** Validates coordinate ranges; throws std::invalid_argument. */
  int index_of(const std::vector<int>& coords) const;

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const { return neg_[a]; }
  int element_order(int a) const { return order_[a]; }

  /** Element-level ops check that the operand belongs to this group. */
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;

  /** Elements with 2x = 0, identity included, ascending. */
  const std::vector<int>& involutions() const { return involutions_; }
  int involution_count() const { return static_cast<int>(involutions_.size()); }

  /**
   * All group automorphisms as permutations of element indices, sorted
   * lexicographically. Enumerated by choosing images for the canonical basis
   * e_1..e_k among elements whose order divides the respective factor, then
   * keeping the bijective extensions. Throws ScaleError when n exceeds the
   * cap or the candidate space is too large to scan.
   */
  std::vector<Permutation> automorphisms(int cap = 200) const;

  /**
   * All subgroups, found by closing {0} under single-generator extensions
   * until no new subgroup appears. Sorted by (order, elements) so scans have
   * a deterministic witness order. Throws ScaleError when n exceeds the cap.
   */
  std::vector<Subgroup> subgroups(int cap = 200) const;

  /** Cosets of h, each sorted, listed by ascending smallest member. */
  std::vector<std::vector<int>> cosets(const Subgroup& h) const;

 private:
  void check_member(const Element& e, const char* op) const;

  std::vector<int> factors_;
  std::vector<int> strides_;
  int n_ = 0;
  Family family_ = Family::Other;
  std::vector<int> coords_;  // n x rank, row-major
  std::vector<int> neg_;
  std::vector<int> order_;
  std::vector<int> involutions_;
};

}  // namespace caydis
