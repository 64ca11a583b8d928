// Brute-force reference implementations used only by tests.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "locinv/rational.hpp"
#include "locinv/shapes.hpp"

namespace oracle {

using locinv::Composition;
using locinv::Partition;
using locinv::Rational;

/// Every composition of n from the 2^(n-1) cut sets, sorted descending.
inline std::vector<Composition> compositions(int n) {
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (mask & (1u << k)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  for (const auto& c : compositions(n))
    if (std::is_sorted(c.begin(), c.end(), std::greater<>{})) out.emplace_back(c);
  return out;
}

/// Distinct rearrangements of mu.
inline std::vector<Composition> rearrangements(const Partition& mu) {
  std::vector<int> p(mu.parts());
  std::sort(p.begin(), p.end());
  std::vector<Composition> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline locinv::BigInt w_by_enumeration(const Partition& mu) {
  locinv::BigInt sum = 0;
  for (const auto& a : rearrangements(mu)) sum += a.last();
  return sum;
}

inline Rational harmonic_sum(const Partition& lambda) {
  Rational sum = 0;
  for (const auto& b : rearrangements(lambda)) {
    locinv::BigInt z = 1;
    int partial = 0;
    for (int p : b) z *= (partial += p);
    sum += Rational(1) / Rational(z);
  }
  return sum;
}

/// Cycle lengths of a permutation of {0..n-1} listed with cycles starting at
/// their minima and minima decreasing.
inline std::vector<int> cycle_composition(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::pair<int, int>> cycles;  // (minimum, length)
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int len = 0;
    for (int x = s; !seen[static_cast<std::size_t>(x)]; x = perm[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    cycles.emplace_back(s, len);
  }
  std::sort(cycles.begin(), cycles.end(), std::greater<>{});
  std::vector<int> out;
  for (auto [m, len] : cycles) out.push_back(len);
  return out;
}

inline long count_perms_with_cycle_composition(const Composition& beta) {
  const int n = beta.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    if (cycle_composition(perm) == beta.parts()) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Partitions of m whose diagram lies inside dg(outer).
inline std::vector<Partition> contained(const Partition& outer, int m) {
  std::vector<Partition> out;
  for (const auto& p : partitions(m))
    if (outer.contains(p)) out.push_back(p);
  return out;
}

inline std::vector<locinv::Cell> oracle_skew(const Partition& outer, const Partition& inner) {
  std::vector<locinv::Cell> cells;
  for (const auto& c : locinv::diagram(outer))
    if (c.col > inner.part_or_zero(c.row - 1)) cells.push_back(c);
  return cells;
}

inline bool distinct_columns(const std::vector<locinv::Cell>& cells) {
  std::set<int> cols;
  for (const auto& c : cells)
    if (!cols.insert(c.col).second) return false;
  return true;
}

/// Nonempty, edge-connected and free of 2x2 squares.
inline bool is_rim_hook(const std::vector<locinv::Cell>& cells) {
  if (cells.empty()) return false;
  std::set<locinv::Cell> s(cells.begin(), cells.end());
  for (const auto& c : cells)
    if (s.count({c.row + 1, c.col}) && s.count({c.row, c.col + 1}) && s.count({c.row + 1, c.col + 1}))
      return false;
  std::set<locinv::Cell> seen{cells.front()};
  std::vector<locinv::Cell> stack{cells.front()};
  while (!stack.empty()) {
    auto c = stack.back();
    stack.pop_back();
    for (locinv::Cell d : {locinv::Cell{c.row + 1, c.col}, locinv::Cell{c.row - 1, c.col},
                           locinv::Cell{c.row, c.col + 1}, locinv::Cell{c.row, c.col - 1}})
      if (s.count(d) && seen.insert(d).second) stack.push_back(d);
  }
  return seen.size() == s.size();
}

inline int rows_spanned(const std::vector<locinv::Cell>& cells) {
  std::set<int> rows;
  for (const auto& c : cells) rows.insert(c.row);
  return static_cast<int>(rows.size());
}

inline int hook_sign(const std::vector<locinv::Cell>& cells) {
  return rows_spanned(cells) % 2 == 1 ? 1 : -1;
}

inline bool has_col1(const std::vector<locinv::Cell>& cells) {
  return std::any_of(cells.begin(), cells.end(), [](const locinv::Cell& c) { return c.col == 1; });
}

/// (gamma, sign) for every rim-hook of size L removable from mu.
inline std::vector<std::pair<Partition, int>> rim_hook_removals(const Partition& mu, int L,
                                                               bool special_only = false) {
  std::vector<std::pair<Partition, int>> out;
  if (L > mu.size()) return out;
  for (const auto& g : contained(mu, mu.size() - L)) {
    auto cells = oracle_skew(mu, g);
    if (is_rim_hook(cells) && (!special_only || has_col1(cells))) out.emplace_back(g, hook_sign(cells));
  }
  return out;
}

inline std::vector<Partition> strip_removals(const Partition& lam, int L) {
  std::vector<Partition> out;
  if (L > lam.size()) return out;
  for (const auto& g : contained(lam, lam.size() - L))
    if (distinct_columns(oracle_skew(lam, g))) out.push_back(g);
  return out;
}

/// Counts SSYT by filling cells in reading order, checking each placement.
inline long ssyt_count(const Partition& lam, const Composition& beta) {
  const auto cells = locinv::diagram(lam);
  std::vector<int> remaining(beta.parts());
  std::vector<std::vector<int>> grid;
  for (int p : lam) grid.emplace_back(static_cast<std::size_t>(p), 0);
  std::function<long(std::size_t)> go = [&](std::size_t idx) -> long {
    if (idx == cells.size()) return 1;
    const auto [r, c] = cells[idx];
    long total = 0;
    for (int v = 1; v <= static_cast<int>(remaining.size()); ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (c > 1 && grid[r - 1][c - 2] > v) continue;
      if (r > 1 && grid[r - 2][c - 1] >= v) continue;
      grid[r - 1][c - 1] = v;
      --remaining[static_cast<std::size_t>(v - 1)];
      total += go(idx + 1);
      ++remaining[static_cast<std::size_t>(v - 1)];
      grid[r - 1][c - 1] = 0;
    }
    return total;
  };
  return go(0);
}

/// Signed count of rim-hook tableaux found by trying every filling with the
/// given content and checking the definition cell by cell.
inline long rht_signed_count(const Partition& lam, const Composition& beta) {
  std::vector<int> labels;
  for (int k = 1; k <= beta.length(); ++k)
    labels.insert(labels.end(), static_cast<std::size_t>(beta[static_cast<std::size_t>(k - 1)]), k);
  const auto cells = locinv::diagram(lam);
  long total = 0;
  do {
    int sign = 1;
    bool ok = true;
    for (int k = 1; k <= beta.length() && ok; ++k) {
      std::vector<locinv::Cell> hook;
      std::vector<int> rowlen(static_cast<std::size_t>(lam.length()), 0);
      for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        if (labels[idx] == k) hook.push_back(cells[idx]);
        if (labels[idx] <= k) ++rowlen[static_cast<std::size_t>(cells[idx].row - 1)];
      }
      // cells labeled <= k must be left-justified and form a partition
      for (std::size_t idx = 0; idx < cells.size() && ok; ++idx)
        if (labels[idx] <= k && cells[idx].col > rowlen[static_cast<std::size_t>(cells[idx].row - 1)]) ok = false;
      for (std::size_t r = 1; r < rowlen.size() && ok; ++r)
        if (rowlen[r] > rowlen[r - 1]) ok = false;
      if (ok && !is_rim_hook(hook)) ok = false;
      if (ok) sign *= hook_sign(hook);
    }
    if (ok) total += sign;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return total;
}

}  // namespace oracle
