#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "locinv/rational.hpp"
#include "locinv/shapes.hpp"

namespace locinv {

/// Dense exact-rational matrix whose rows and columns are keyed by
/// compositions (partitions are stored through their composition view).
class IndexedMatrix {
 public:
  IndexedMatrix() = default;
  /// Zero matrix with the given keys. Throws on duplicate keys.
  IndexedMatrix(std::vector<Composition> row_keys, std::vector<Composition> col_keys);

  static IndexedMatrix identity(const std::vector<Composition>& keys);

  const std::vector<Composition>& row_keys() const noexcept { return rows_; }
  const std::vector<Composition>& col_keys() const noexcept { return cols_; }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  std::size_t num_cols() const noexcept { return cols_.size(); }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_.size() + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_.size() + c]; }

  /// Lookup by key; throws std::out_of_range for an unknown key.
  Rational& operator()(const Composition& row, const Composition& col);
  const Rational& operator()(const Composition& row, const Composition& col) const;

  std::optional<std::size_t> row_index(const Composition& key) const;
  std::optional<std::size_t> col_index(const Composition& key) const;

  /// Product matched by key: the column keys of *this must be exactly the
  /// row keys of rhs (in any order). Throws std::invalid_argument otherwise.
  IndexedMatrix operator*(const IndexedMatrix& rhs) const;

  /// Square, same row and column key lists, entries chi(row == col).
  bool is_identity() const;

  friend bool operator==(const IndexedMatrix&, const IndexedMatrix&) = default;

 private:
  std::vector<Composition> rows_;
  std::vector<Composition> cols_;
  std::map<Composition, std::size_t> row_pos_;
  std::map<Composition, std::size_t> col_pos_;
  std::vector<Rational> entries_;
};

/// Converts the keys of a partition list to their composition view.
std::vector<Composition> as_keys(const std::vector<Partition>& shapes);

}  // namespace locinv
