#include "caydis/graph.hpp"

#include <ostream>
#include <stdexcept>

namespace caydis {

CayleyGraph::CayleyGraph(Group group, const ConnectionSet& s)
    : group_(std::move(group)), connection_(s.members) {
  if (s.factors != group_.factors())
    throw std::invalid_argument("connection set was built for a different group spec");
  int n = group_.order();
  connection_bits_ = Bitset(n);
  for (int v : connection_) {
    if (v <= 0 || v >= n)
      throw std::invalid_argument("connection set member out of range (or identity)");
    connection_bits_.set(v);
  }
  for (int v : connection_)
    if (!connection_bits_.test(group_.neg(v)))
      throw std::invalid_argument("connection set is not inverse-closed");

  rows_.assign(n, Bitset(n));
  for (int u = 0; u < n; ++u)
    for (int v : connection_) rows_[u].set(group_.add(u, v));
}

bool CayleyGraph::is_independent(const std::vector<int>& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) return false;
  return true;
}

Permutation CayleyGraph::translation(int g) const {
  int n = vertex_count();
  std::vector<int> img(n);
  for (int v = 0; v < n; ++v) img[v] = group_.add(v, g);
  return Permutation(std::move(img));
}

Permutation CayleyGraph::inversion() const {
  int n = vertex_count();
  std::vector<int> img(n);
  for (int v = 0; v < n; ++v) img[v] = group_.neg(v);
  return Permutation(std::move(img));
}

void CayleyGraph::write_dimacs(std::ostream& out) const {
  out << "p edge " << vertex_count() << ' ' << edge_count() << '\n';
  for (int u = 0; u < vertex_count(); ++u)
    for (int v = u + 1; v < vertex_count(); ++v)
      if (adjacent(u, v)) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

}  // namespace caydis
