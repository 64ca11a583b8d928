#include "locinv/brick.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "locinv/scalars.hpp"

namespace locinv {

namespace {

bool obt_less(const OBT& a, const OBT& b) { return filling_less(a.filling(), b.filling()); }

}  // namespace

Filling OBT::filling() const {
  Filling f = Filling::blank(shape);
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    std::size_t col = 0;
    for (int k : row_labels[r])
      for (int c = 0; c < content[static_cast<std::size_t>(k - 1)]; ++c) f.rows[r][col++] = k;
  }
  return f;
}

std::vector<Brick> OBT::bricks() const {
  std::vector<Brick> out;
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    int col = 1;
    for (int k : row_labels[r]) {
      const int len = content[static_cast<std::size_t>(k - 1)];
      out.push_back({k, static_cast<int>(r) + 1, col, len, col == 1 ? 1 : -1});
      col += len;
    }
  }
  std::sort(out.begin(), out.end(), [](const Brick& a, const Brick& b) { return a.label < b.label; });
  return out;
}

std::vector<OBT> enumerate_obt(const Partition& lambda, const Composition& beta) {
  if (lambda.size() != beta.size()) throw std::invalid_argument("shape and content sizes differ");
  std::vector<int> room(lambda.begin(), lambda.end());
  OBT t{lambda, beta, std::vector<std::vector<int>>(room.size())};
  std::vector<OBT> out;
  std::function<void(int)> place = [&](int k) {
    if (k > beta.length()) {
      out.push_back(t);
      return;
    }
    const int len = beta[static_cast<std::size_t>(k - 1)];
    for (std::size_t r = 0; r < room.size(); ++r) {
      if (room[r] < len) continue;
      room[r] -= len;
      t.row_labels[r].push_back(k);
      place(k + 1);
      t.row_labels[r].pop_back();
      room[r] += len;
    }
  };
  place(1);
  std::sort(out.begin(), out.end(), obt_less);
  return out;
}

IndexedMatrix obt_count_matrix(int n) {
  const auto rows = partitions(n);
  const auto cols = compositions(n);
  IndexedMatrix m(as_keys(rows), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m.at(r, c) = static_cast<long>(enumerate_obt(rows[r], cols[c]).size());
  return m;
}

LocalSystem obt_system() {
  LocalSystem sys;
  sys.name = "brick";
  sys.shapes = [](int n) { return as_keys(partitions(n)); };
  sys.succ_a = [](const Composition& c, int L) {
    const Partition lambda(c);
    std::vector<Composition> out;
    for (const auto& [i, m] : multiplicities(lambda)) {
      if (i < L) continue;
      auto parts = multiset_difference(lambda, {i}).parts();
      if (i > L) parts.push_back(i - L);
      out.push_back(Partition::sorted(std::move(parts)).composition());
    }
    return out;
  };
  sys.succ_b = [](const Composition& c, int L) {
    const Partition mu(c);
    std::vector<Composition> out;
    if (L > mu.size()) return out;
    for (const auto& eps : partitions(L))
      if (multiset_subset(eps, mu)) out.push_back(multiset_difference(mu, eps).composition());
    return out;
  };
  sys.weight_a = [](const Composition& l, const Composition& g) -> Rational {
    const Partition lambda(l);
    const auto removed = multiset_difference(lambda, Partition(g));
    return Rational(multiplicity(lambda, removed[0]));
  };
  sys.weight_b = [](const Composition& m, const Composition& d) -> Rational {
    const Partition mu(m), delta(d);
    const int sign = (mu.length() - delta.length() - 1) % 2 == 0 ? 1 : -1;
    return Rational(BigInt(sign) * big_w(multiset_difference(mu, delta))) / mu.size();
  };
  return sys;
}

ObtSplit obt_split(const OBT& t) {
  const int s = t.content.length();
  if (s == 0) throw std::invalid_argument("empty tabloid");
  const int L = t.content.last();
  std::size_t r = 0;
  while (t.row_labels[r].empty() || t.row_labels[r].back() != s) ++r;
  const int i = t.shape[r];
  int k = 0;
  for (std::size_t q = 0; q <= r; ++q)
    if (t.shape[q] == i) ++k;

  std::vector<int> truncated = t.row_labels[r];
  truncated.pop_back();
  std::vector<std::vector<int>> rows;
  std::vector<int> lengths;
  for (std::size_t q = 0; q < t.row_labels.size(); ++q) {
    if (q == r) continue;
    rows.push_back(t.row_labels[q]);
    lengths.push_back(t.shape[q]);
  }
  if (i > L) {
    std::size_t pos = 0;
    while (pos < lengths.size() && lengths[pos] > i - L) ++pos;
    rows.insert(rows.begin() + static_cast<long>(pos), truncated);
    lengths.insert(lengths.begin() + static_cast<long>(pos), i - L);
  }
  return {k, OBT{Partition(lengths), t.content.truncated(), std::move(rows)}};
}

OBT obt_join(const Partition& lambda, int last_len, int k, const OBT& rest) {
  const auto removed = multiset_difference(lambda, rest.shape);
  const auto added = multiset_difference(rest.shape, lambda);
  if (removed.length() != 1 || lambda.size() != rest.shape.size() + last_len)
    throw std::invalid_argument("shape is not reachable by one brick");
  const int i = removed[0];
  if (i - last_len > 0 ? added != Partition{i - last_len} : !added.empty())
    throw std::invalid_argument("shape is not reachable by one brick");
  if (k < 1 || k > multiplicity(lambda, i)) throw std::invalid_argument("row index out of range");

  const int s = rest.content.length() + 1;
  std::vector<std::vector<int>> rows = rest.row_labels;
  std::vector<int> lengths(rest.shape.begin(), rest.shape.end());
  std::vector<int> grown;
  if (i > last_len) {
    const auto at = std::find(lengths.begin(), lengths.end(), i - last_len) - lengths.begin();
    grown = rows[static_cast<std::size_t>(at)];
    rows.erase(rows.begin() + at);
    lengths.erase(lengths.begin() + at);
  }
  grown.push_back(s);
  std::size_t pos = 0;
  while (pos < lengths.size() && lengths[pos] > i) ++pos;
  pos += static_cast<std::size_t>(k - 1);
  rows.insert(rows.begin() + static_cast<long>(pos), grown);
  return OBT{lambda, rest.content.appended(last_len), std::move(rows)};
}

std::vector<BrickTabloid> enumerate_bt(const Composition& beta, const Partition& mu) {
  if (beta.size() != mu.size()) throw std::invalid_argument("shape and type sizes differ");
  std::vector<BrickTabloid> out;
  std::vector<int> alpha(mu.begin(), mu.end());
  do {
    const Composition content(alpha);
    if (auto t = cbt_find(beta, content))
      out.push_back({beta, mu, *t, weighted_factors(beta, content).second});
  } while (std::prev_permutation(alpha.begin(), alpha.end()));
  return out;
}

BigInt w_of(const Composition& beta, const Partition& mu) {
  BigInt total = 0;
  for (const auto& t : enumerate_bt(beta, mu)) total += t.weight;
  return total;
}

IndexedMatrix brick_B_closed(int n) {
  const auto rows = compositions(n);
  const auto cols = partitions(n);
  IndexedMatrix m(rows, as_keys(cols));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const int sign = (cols[c].length() - rows[r].length()) % 2 == 0 ? 1 : -1;
      m.at(r, c) = Rational(BigInt(sign) * w_of(rows[r], cols[c])) / Rational(big_z(rows[r]));
    }
  return m;
}

namespace {

// Index (0-based) of the brick holding the given 1-based cell.
std::size_t brick_of_cell(const Composition& bricks, int cell) {
  int end = 0;
  for (std::size_t b = 0; b < static_cast<std::size_t>(bricks.length()); ++b) {
    end += bricks[b];
    if (cell <= end) return b;
  }
  throw std::invalid_argument("marked cell outside the row");
}

int brick_start(const std::vector<int>& bricks, std::size_t b) {
  int start = 1;
  for (std::size_t q = 0; q < b; ++q) start += bricks[q];
  return start;
}

MarkedTiling swap_with_last(const MarkedTiling& t, std::size_t b, int offset) {
  std::vector<int> parts(t.bricks.begin(), t.bricks.end());
  const std::size_t last = parts.size() - 1;
  std::swap(parts[b], parts[last]);
  const int cell = brick_start(parts, last) + offset;
  return {Composition(std::move(parts)), cell, 0};
}

}  // namespace

MarkedTiling marked_brick_bijection(const MarkedTiling& t) {
  if (t.bricks.empty()) throw std::invalid_argument("empty tiling");
  if (t.marked_brick != 0) throw std::invalid_argument("input tiling already has a marked brick");
  if (t.marked_cell < 1 || t.marked_cell > t.bricks.size()) throw std::invalid_argument("marked cell outside the row");
  const std::vector<int> parts(t.bricks.begin(), t.bricks.end());
  const std::size_t b = brick_of_cell(t.bricks, t.marked_cell);
  auto out = swap_with_last(t, b, t.marked_cell - brick_start(parts, b));
  out.marked_brick = static_cast<int>(b) + 1;
  return out;
}

MarkedTiling marked_brick_inverse(const MarkedTiling& s) {
  if (s.bricks.empty()) throw std::invalid_argument("empty tiling");
  const int count = s.bricks.length();
  if (s.marked_brick < 1 || s.marked_brick > count) throw std::invalid_argument("no marked brick");
  if (s.marked_cell < 1 || s.marked_cell > s.bricks.size()) throw std::invalid_argument("marked cell outside the row");
  const std::vector<int> parts(s.bricks.begin(), s.bricks.end());
  const std::size_t last = parts.size() - 1;
  if (brick_of_cell(s.bricks, s.marked_cell) != last)
    throw std::invalid_argument("marked cell is not in the last brick");
  const std::size_t b = static_cast<std::size_t>(s.marked_brick - 1);
  const int offset = s.marked_cell - brick_start(parts, last);
  std::vector<int> swapped = parts;
  std::swap(swapped[b], swapped[last]);
  return {Composition(swapped), brick_start(swapped, b) + offset, 0};
}

BrickLocalReport brick_local_g(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("shapes of different sizes");
  const int n = lambda.size();
  if (n == 0) throw std::invalid_argument("local identity needs n > 0");

  std::vector<Partition> gammas;
  if (lambda == mu) {
    for (const auto& [i, m] : multiplicities(lambda)) gammas.push_back(multiset_difference(lambda, {i}));
    std::reverse(gammas.begin(), gammas.end());
  } else {
    const auto ops = multiset_ops(lambda, mu);
    if (ops.difference.length() == 1) {
      const int i = ops.difference[0];
      gammas.push_back(ops.intersection);
      const auto rho = multiset_difference(mu, lambda);
      auto mult = multiplicities(rho);
      for (auto it = mult.rbegin(); it != mult.rend(); ++it)
        if (it->first < i) gammas.push_back(multiset_union(ops.intersection, {it->first}));
    }
  }

  BrickLocalReport report;
  report.total = 0;
  for (const auto& g : gammas) {
    BrickLocalTerm term;
    term.gamma = g;
    term.multiplicity = multiplicity(lambda, multiset_difference(lambda, g)[0]);
    term.sign = (mu.length() - g.length() - 1) % 2 == 0 ? 1 : -1;
    term.w = big_w(multiset_difference(mu, g));
    term.value = Rational(BigInt(term.multiplicity * term.sign) * term.w) / n;
    report.total += term.value;
    report.terms.push_back(std::move(term));
  }
  return report;
}

}  // namespace locinv
