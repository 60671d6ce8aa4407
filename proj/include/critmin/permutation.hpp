#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "critmin/errors.hpp"

namespace critmin {

// Permutation of {0, ..., d-1} stored as its image array.
//
// Composition convention, fixed project-wide: p * q applies p first, then q
// (left-to-right action), i.e. (p * q)(i) = q(p(i)). Certificate products
// and commutators all read in this order.
class Permutation {
 public:
  static Permutation identity(std::size_t degree);

  // Throws malformed_permutation unless images is a bijection.
  explicit Permutation(std::vector<int> images);

  std::size_t degree() const noexcept { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  // Cycle lengths in non-increasing order, fixed points included.
  std::vector<long long> cycle_lengths() const;
  std::size_t cycle_count() const noexcept;

  // Length of the unique nontrivial cycle if the cycle type is
  // (m, 1, ..., 1) with m >= 2; 0 otherwise (identity or several cycles).
  long long single_cycle_order() const noexcept;

  friend Permutation operator*(const Permutation& p, const Permutation& q);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;
  std::vector<int> images_;
};

// a * b * a^-1 * b^-1 under the left-to-right convention.
Permutation commutator(const Permutation& a, const Permutation& b);

// Relabeling of p along c: c^-1 * p * c. Preserves cycle type.
Permutation conjugate(const Permutation& p, const Permutation& c);

// True iff the group generated by the given permutations acts transitively
// on {0, ..., degree-1}. The empty set is transitive only for degree <= 1.
bool transitive(std::span<const Permutation> generators, std::size_t degree);

}  // namespace critmin
