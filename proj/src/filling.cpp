#include "locinv/filling.hpp"

#include <algorithm>
#include <stdexcept>

namespace locinv {

Filling Filling::blank(const Composition& shape) {
  Filling f{shape, {}};
  for (int p : shape) f.rows.emplace_back(static_cast<std::size_t>(p), 0);
  return f;
}

std::vector<int> Filling::content() const {
  std::vector<int> counts(static_cast<std::size_t>(std::max(max_label(), 0)), 0);
  for (const auto& row : rows)
    for (int v : row)
      if (v > 0) ++counts[static_cast<std::size_t>(v - 1)];
  return counts;
}

std::vector<Cell> Filling::cells_with_label(int k) const {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] == k) cells.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
  return cells;
}

int Filling::max_label() const {
  int m = 0;
  for (const auto& row : rows)
    for (int v : row) m = std::max(m, v);
  return m;
}

bool Filling::congruent() const {
  if (static_cast<int>(rows.size()) != shape.length()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (static_cast<int>(rows[i].size()) != shape[i]) return false;
  return true;
}

std::vector<int> Filling::flat() const {
  std::vector<int> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::string Filling::str() const {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += '/';
    const bool compact = std::all_of(rows[i].begin(), rows[i].end(), [](int v) { return v >= 0 && v < 10; });
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (!compact && j > 0) out += ',';
      out += std::to_string(rows[i][j]);
    }
  }
  return out;
}

bool filling_less(const Filling& a, const Filling& b) {
  auto fa = a.flat(), fb = b.flat();
  if (fa != fb) return fa < fb;
  return a.shape < b.shape;
}

Filling restrict_labels(const Filling& f, int k) {
  Filling out;
  std::vector<int> parts;
  for (const auto& row : f.rows) {
    std::vector<int> kept;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] <= k) {
        if (kept.size() != j) throw std::invalid_argument("restricted cells are not left-justified");
        kept.push_back(row[j]);
      }
    }
    if (kept.empty()) continue;
    parts.push_back(static_cast<int>(kept.size()));
    out.rows.push_back(std::move(kept));
  }
  out.shape = Composition(std::move(parts));
  return out;
}

Filling extend_filling(const Filling& inner, const Composition& outer, int label) {
  Filling f = Filling::blank(outer);
  for (auto& row : f.rows) std::fill(row.begin(), row.end(), label);
  for (std::size_t i = 0; i < inner.rows.size(); ++i)
    std::copy(inner.rows[i].begin(), inner.rows[i].end(), f.rows[i].begin());
  return f;
}

}  // namespace locinv
