#pragma once

#include <iosfwd>
#include <vector>

#include "caydis/bitset.hpp"
#include "caydis/group.hpp"
#include "caydis/permutation.hpp"
#include "caydis/sampler.hpp"

namespace caydis {

/**
 * Cayley graph of a finite abelian group with an inverse-closed connection
 * set S (0 excluded): vertices are element indices, u ~ v iff u - v is in S.
 * |S|-regular, undirected, loop-free. Adjacency is stored as n bit rows.
 */
class CayleyGraph {
 public:
  /** Validates that s was built against the same factor list. */
  CayleyGraph(Group group, const ConnectionSet& s);

  int vertex_count() const { return group_.order(); }
  int degree() const { return static_cast<int>(connection_.size()); }
  long long edge_count() const {
    return static_cast<long long>(vertex_count()) * degree() / 2;
  }

  const Group& group() const { return group_; }
  const std::vector<int>& connection() const { return connection_; }
  const Bitset& connection_bits() const { return connection_bits_; }

  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const Bitset& neighbors(int v) const { return rows_[v]; }
  const std::vector<Bitset>& rows() const { return rows_; }

  bool is_independent(const std::vector<int>& vertices) const;

  /** x -> x + g; an automorphism for every g. */
  Permutation translation(int g) const;
  /** x -> -x; an automorphism because S is inverse-closed. */
  Permutation inversion() const;

  /** DIMACS: "p edge n m" then one 1-based "e u v" line per edge. */
  void write_dimacs(std::ostream& out) const;

 private:
  Group group_;
  std::vector<int> connection_;
  Bitset connection_bits_;
  std::vector<Bitset> rows_;
};

}  // namespace caydis
