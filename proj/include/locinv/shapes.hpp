#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace locinv {

/// A finite list of positive integers. The empty list is the unique
/// composition of 0.
class Composition {
 public:
  Composition() = default;
  /// Throws std::invalid_argument if any part is < 1.
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  /// Last part. Throws std::invalid_argument("no last part") when empty.
  int last() const;
  /// The composition with its last part removed.
  Composition truncated() const;
  /// This composition with one more part appended.
  Composition appended(int part) const;

  /// Compact display: "211" when every part is a single digit, otherwise
  /// comma separated. The empty composition renders as "".
  std::string str() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A composition whose parts are weakly decreasing.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument unless c is weakly decreasing.
  explicit Partition(const Composition& c);

  /// Weakly decreasing rearrangement of arbitrary positive parts.
  static Partition sorted(std::vector<int> parts);

  const Composition& composition() const noexcept { return comp_; }
  operator const Composition&() const noexcept { return comp_; }  // NOLINT

  const std::vector<int>& parts() const noexcept { return comp_.parts(); }
  int size() const noexcept { return comp_.size(); }
  int length() const noexcept { return comp_.length(); }
  bool empty() const noexcept { return comp_.empty(); }
  int operator[](std::size_t i) const { return comp_[i]; }
  auto begin() const noexcept { return comp_.begin(); }
  auto end() const noexcept { return comp_.end(); }
  int last() const { return comp_.last(); }
  std::string str() const { return comp_.str(); }

  /// Part i (0-based), or 0 past the end.
  int part_or_zero(int i) const noexcept {
    return i >= 0 && i < length() ? comp_[static_cast<std::size_t>(i)] : 0;
  }
  /// Length of column j (1-based).
  int column_length(int j) const noexcept;
  /// dg(this) contains dg(other).
  bool contains(const Partition& other) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.comp_ <=> b.comp_;
  }

 private:
  Composition comp_;
};

/// A box of a diagram, 1-based.
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// All cells of dg(alpha) in reading order (top row first, left to right).
std::vector<Cell> diagram(const Composition& alpha);

/// C(n) in canonical order: first part descending, recursively. This is
/// descending lexicographic order on the part lists.
std::vector<Composition> compositions(int n);

/// P(n) in descending lexicographic order.
std::vector<Partition> partitions(int n);

Partition sort_comp(const Composition& alpha);

struct Truncation {
  Composition rest;
  int last = 0;
};
/// (beta*, L(beta)). Throws std::invalid_argument("no last part") on ().
Truncation truncate(const Composition& beta);

/// Number of parts of lambda equal to i.
int multiplicity(const Partition& lambda, int i);

/// Multiplicity vector view of a partition: part value -> count.
std::map<int, int> multiplicities(const Partition& lambda);

Partition multiset_union(const Partition& a, const Partition& b);
Partition multiset_intersection(const Partition& a, const Partition& b);
Partition multiset_difference(const Partition& a, const Partition& b);
/// m_i(a) <= m_i(b) for all i.
bool multiset_subset(const Partition& a, const Partition& b);

struct MultisetOps {
  Partition union_;
  Partition intersection;
  Partition difference;
  bool subset = false;
};
MultisetOps multiset_ops(const Partition& lambda, const Partition& mu);

/// Parses "3,1,1", "(3,1,1)", "[3,1,1]" or a digit run such as "311".
/// "" and "()" give the empty composition.
Composition parse_composition(const std::string& text);
Partition parse_partition(const std::string& text);

}  // namespace locinv
