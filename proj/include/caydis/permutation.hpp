#pragma once

#include <compare>
#include <vector>

namespace caydis {

/** Permutation of {0, ..., n-1}, stored as its image array. */
class Permutation {
 public:
  Permutation() = default;
  /** Throws std::invalid_argument if image is not a bijection. */
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator[](int x) const { return image_[x]; }
  const std::vector<int>& image() const { return image_; }

  /** Composition: (a * b)(x) = a(b(x)). */
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  Permutation inverse() const;
  bool is_identity() const;
  std::vector<int> fixed_points() const;

  bool operator==(const Permutation&) const = default;
  /** Lexicographic order on image arrays; gives a canonical listing order. */
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

/**
 * Number of orbits of perm restricted to the given vertex class.
 * Throws std::invalid_argument unless the class is setwise invariant.
 */
int orbit_count_on_class(const Permutation& perm, const std::vector<int>& cls);

}  // namespace caydis
