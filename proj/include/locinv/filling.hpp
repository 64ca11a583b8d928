#pragma once

#include <string>
#include <vector>

#include "locinv/shapes.hpp"

namespace locinv {

/// A labeling of dg(shape): rows[i][j] is the label of cell (i+1, j+1).
struct Filling {
  Composition shape;
  std::vector<std::vector<int>> rows;

  /// Empty diagram filled with zeros (meaning "unlabeled").
  static Filling blank(const Composition& shape);

  int label(const Cell& c) const { return rows[c.row - 1][c.col - 1]; }
  void set(const Cell& c, int value) { rows[c.row - 1][c.col - 1] = value; }

  /// content[k-1] = number of cells labeled k, up to the largest label.
  std::vector<int> content() const;
  std::vector<Cell> cells_with_label(int k) const;
  int max_label() const;

  /// True when the row lengths match shape.
  bool congruent() const;

  /// Row-major labels, used as the canonical sort key.
  std::vector<int> flat() const;

  /// Rows joined by '/', e.g. "1122/233".
  std::string str() const;

  friend bool operator==(const Filling&, const Filling&) = default;
};

/// Orders fillings by row-major label string (then by shape).
bool filling_less(const Filling& a, const Filling& b);

/// Keeps the cells whose label is <= k; the result's shape drops empty rows.
/// Throws std::invalid_argument if those cells do not form a left-justified diagram.
Filling restrict_labels(const Filling& f, int k);

/// Copies inner into dg(outer) (dg(inner) must lie inside it) and gives every
/// other cell the label.
Filling extend_filling(const Filling& inner, const Composition& outer, int label);

}  // namespace locinv
