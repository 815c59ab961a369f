#include "caydis/sampler.hpp"

#include <algorithm>
#include <stdexcept>

namespace caydis {

bool ConnectionSet::contains(int index) const {
  return std::binary_search(members.begin(), members.end(), index);
}

Bitset ConnectionSet::member_bits(int n) const {
  Bitset b(n);
  for (int v : members) b.set(v);
  return b;
}

ConnectionSet sample_connection_set(const Group& group, double p, RandomStream& stream) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability p must lie in [0, 1]");
  ConnectionSet s;
  s.factors = group.factors();
  s.p = p;
  for (int x = 1; x < group.order(); ++x) {
    int nx = group.neg(x);
    if (nx < x) continue;  // pair already decided at its representative
    if (!stream.bernoulli(p)) continue;
    s.members.push_back(x);
    if (nx != x) s.members.push_back(nx);
  }
  std::sort(s.members.begin(), s.members.end());
  return s;
}

long long trial_count(const Group& group) {
  long long n = group.order();
  long long m = group.involution_count();
  return (m - 1) + (n - m) / 2;
}

SizeDecomposition decompose(const Group& group, const ConnectionSet& s) {
  SizeDecomposition d;
  for (int v : s.members) {
    if (group.neg(v) == v)
      ++d.x_prime;
    else if (group.neg(v) > v)
      ++d.x_double_prime;
  }
  return d;
}

ConnectionSet connection_set_from_members(const Group& group, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int v : members) {
    if (v <= 0 || v >= group.order())
      throw std::invalid_argument("connection set member out of range (or identity)");
    if (!std::binary_search(members.begin(), members.end(), group.neg(v)))
      throw std::invalid_argument("connection set is not inverse-closed");
  }
  ConnectionSet s;
  s.factors = group.factors();
  s.members = std::move(members);
  return s;
}

}  // namespace caydis
