#include "caydis/permutation.hpp"

#include <stdexcept>

namespace caydis {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
      throw std::invalid_argument("permutation image is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("composing permutations of different degrees");
  std::vector<int> img(a.degree());
  for (int x = 0; x < a.degree(); ++x) img[x] = a.image_[b.image_[x]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(image_.size());
  for (int x = 0; x < degree(); ++x) img[image_[x]] = x;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (image_[x] != x) return false;
  return true;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int x = 0; x < degree(); ++x)
    if (image_[x] == x) out.push_back(x);
  return out;
}

int orbit_count_on_class(const Permutation& perm, const std::vector<int>& cls) {
  std::vector<char> member(perm.degree(), 0);
  for (int v : cls) member[v] = 1;
  for (int v : cls)
    if (!member[perm[v]])
      throw std::invalid_argument("class is not invariant under permutation");

  std::vector<char> visited(perm.degree(), 0);
  int orbits = 0;
  for (int v : cls) {
    if (visited[v]) continue;
    ++orbits;
    for (int w = v; !visited[w]; w = perm[w]) visited[w] = 1;
  }
  return orbits;
}

}  // namespace caydis
