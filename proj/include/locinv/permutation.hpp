#pragma once

#include <string>
#include <vector>

#include "locinv/rational.hpp"
#include "locinv/shapes.hpp"

namespace locinv {

/// A bijection of a finite sorted set of integers.
class Permutation {
 public:
  Permutation() = default;

  /// Elements of ground not mentioned in any cycle are fixed. Throws
  /// std::invalid_argument on repeated or foreign elements.
  static Permutation from_cycles(std::vector<int> ground, const std::vector<std::vector<int>>& cycles);
  /// Ground set is the union of the cycles.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);
  static Permutation identity(std::vector<int> ground);

  const std::vector<int>& ground() const noexcept { return ground_; }
  int size() const noexcept { return static_cast<int>(ground_.size()); }
  /// Image of x; throws std::out_of_range when x is not in the ground set.
  int operator()(int x) const;

  /// Cycles starting at their minima, minima decreasing left to right.
  std::vector<std::vector<int>> canonical_cycles() const;
  Composition cyc_comp() const;
  Partition cyc_part() const;

  /// Canonical cycle notation, e.g. "(8)(4,7,6)(3,9)(1,5,2)".
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> ground_;
  std::vector<int> images_;
};

/// Number of permutations of an n-set whose cycle composition is beta: n!/Z_beta.
BigInt count_by_cyc_comp(int n, const Composition& beta);

/// Every permutation of the ground set with cycle composition beta, built by
/// filling cycles right to left, each new cycle opening with the least unused element.
std::vector<Permutation> permutations_with_cyc_comp(const std::vector<int>& ground,
                                                    const Composition& beta);

/// 1, 2, ..., n.
std::vector<int> iota_ground(int n);

}  // namespace locinv
