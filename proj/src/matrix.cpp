#include "locinv/matrix.hpp"

#include <stdexcept>

namespace locinv {

namespace {

std::map<Composition, std::size_t> positions(const std::vector<Composition>& keys) {
  std::map<Composition, std::size_t> pos;
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (!pos.emplace(keys[i], i).second)
      throw std::invalid_argument("duplicate matrix key '" + keys[i].str() + "'");
  return pos;
}

}  // namespace

IndexedMatrix::IndexedMatrix(std::vector<Composition> row_keys, std::vector<Composition> col_keys)
    : rows_(std::move(row_keys)),
      cols_(std::move(col_keys)),
      row_pos_(positions(rows_)),
      col_pos_(positions(cols_)),
      entries_(rows_.size() * cols_.size()) {}

IndexedMatrix IndexedMatrix::identity(const std::vector<Composition>& keys) {
  IndexedMatrix m(keys, keys);
  for (std::size_t i = 0; i < keys.size(); ++i) m.at(i, i) = 1;
  return m;
}

Rational& IndexedMatrix::operator()(const Composition& row, const Composition& col) {
  return at(row_pos_.at(row), col_pos_.at(col));
}

const Rational& IndexedMatrix::operator()(const Composition& row, const Composition& col) const {
  return at(row_pos_.at(row), col_pos_.at(col));
}

std::optional<std::size_t> IndexedMatrix::row_index(const Composition& key) const {
  auto it = row_pos_.find(key);
  if (it == row_pos_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> IndexedMatrix::col_index(const Composition& key) const {
  auto it = col_pos_.find(key);
  if (it == col_pos_.end()) return std::nullopt;
  return it->second;
}

IndexedMatrix IndexedMatrix::operator*(const IndexedMatrix& rhs) const {
  if (cols_.size() != rhs.rows_.size())
    throw std::invalid_argument("matrix product: inner key sets differ");
  std::vector<std::size_t> inner(cols_.size());
  for (std::size_t k = 0; k < cols_.size(); ++k) {
    auto idx = rhs.row_index(cols_[k]);
    if (!idx) throw std::invalid_argument("matrix product: inner key sets differ");
    inner[k] = *idx;
  }
  IndexedMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t k = 0; k < cols_.size(); ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_.size(); ++j) {
        const Rational& b = rhs.at(inner[k], j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

bool IndexedMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_.size(); ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<Composition> as_keys(const std::vector<Partition>& shapes) {
  std::vector<Composition> keys;
  keys.reserve(shapes.size());
  for (const auto& p : shapes) keys.push_back(p.composition());
  return keys;
}

}  // namespace locinv
