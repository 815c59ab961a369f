#include "caydis/events.hpp"

#include <algorithm>

#include "caydis/bitset.hpp"
#include "caydis/errors.hpp"

namespace caydis {

namespace {

bool is_subset(const Subgroup& h, const Subgroup& k) {
  return std::includes(k.elements.begin(), k.elements.end(), h.elements.begin(),
                       h.elements.end());
}

}  // namespace

std::optional<CosetEventCensus> coset_union_event(const Group& group,
                                                  const ConnectionSet& s,
                                                  const std::vector<Subgroup>& subgroups) {
  int n = group.order();
  Bitset members = s.member_bits(n);
  for (const Subgroup& h : subgroups) {
    if (h.order() <= 1 || h.order() >= n) continue;
    std::vector<std::vector<int>> cosets = group.cosets(h);
    for (const Subgroup& k : subgroups) {
      if (k.order() >= n || k.order() < h.order()) continue;
      if (!is_subset(h, k)) continue;
      // S \ K must meet every H-coset in nothing or everything.
      bool holds = true;
      for (const auto& coset : cosets) {
        int inside = 0;
        for (int v : coset)
          if (members.test(v) && !k.contains(v)) ++inside;
        if (inside != 0 && inside != h.order()) {
          holds = false;
          break;
        }
      }
      if (!holds) continue;
      CosetEventCensus census;
      census.h_group = h;
      census.k_group = k;
      census.h = h.order();
      census.k = k.order();
      for (int v : k.elements)
        if (group.neg(v) == v) ++census.j;
      for (int a = 0; a < n; ++a)
        if (!k.contains(a) && h.contains(group.add(a, a))) ++census.i;
      for (int v : h.elements)
        if (v != 0 && group.neg(v) == v) ++census.l;
      return census;
    }
  }
  return std::nullopt;
}

std::optional<CosetEventCensus> coset_union_event(const Group& group,
                                                  const ConnectionSet& s, int cap) {
  return coset_union_event(group, s, group.subgroups(cap));
}

std::optional<Permutation> normalizer_event(const Group& group, const ConnectionSet& s,
                                            const std::vector<Permutation>& automorphisms) {
  int n = group.order();
  Bitset members = s.member_bits(n);
  std::vector<int> negation(n);
  for (int v = 0; v < n; ++v) negation[v] = group.neg(v);
  Permutation inversion(std::move(negation));
  for (const Permutation& phi : automorphisms) {
    if (phi.is_identity() || phi == inversion) continue;
    bool preserves = true;
    for (int v : s.members)
      if (!members.test(phi[v])) {
        preserves = false;
        break;
      }
    if (preserves) return phi;
  }
  return std::nullopt;
}

std::optional<Permutation> normalizer_event(const Group& group, const ConnectionSet& s,
                                            int cap) {
  return normalizer_event(group, s, group.automorphisms(cap));
}

bool good_pair_event(const Group& group, const ConnectionSet& s) {
  switch (group.family()) {
    case Family::TypeII:
      return false;
    case Family::TypeI: {
      if (!group.is_cyclic()) return false;
      if (s.members.empty()) return true;
      return s.size() == group.order() - 1;
    }
    default:
      throw UnsupportedFamilyError(
          "good-pair event is defined for Type I and Type II groups only");
  }
}

}  // namespace caydis
