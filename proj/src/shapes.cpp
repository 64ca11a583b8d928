#include "locinv/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace locinv {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    size_ += p;
  }
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

int Composition::last() const {
  if (parts_.empty()) throw std::invalid_argument("no last part");
  return parts_.back();
}

Composition Composition::truncated() const {
  if (parts_.empty()) throw std::invalid_argument("no last part");
  return Composition(std::vector<int>(parts_.begin(), parts_.end() - 1));
}

Composition Composition::appended(int part) const {
  auto p = parts_;
  p.push_back(part);
  return Composition(std::move(p));
}

std::string Composition::str() const {
  const bool compact =
      std::all_of(parts_.begin(), parts_.end(), [](int p) { return p < 10; });
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition::Partition(std::vector<int> parts) : comp_(std::move(parts)) {
  const auto& p = comp_.parts();
  if (!std::is_sorted(p.begin(), p.end(), std::greater<>{}))
    throw std::invalid_argument("partition parts must be weakly decreasing");
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(const Composition& c) : Partition(c.parts()) {}

Partition Partition::sorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  return Partition(std::move(parts));
}

int Partition::column_length(int j) const noexcept {
  int len = 0;
  for (int p : comp_) {
    if (p < j) break;
    ++len;
  }
  return len;
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other[static_cast<std::size_t>(i)] > comp_[static_cast<std::size_t>(i)]) return false;
  return true;
}

std::vector<Cell> diagram(const Composition& alpha) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(alpha.size()));
  for (int i = 0; i < alpha.length(); ++i)
    for (int j = 1; j <= alpha[static_cast<std::size_t>(i)]; ++j) cells.push_back({i + 1, j});
  return cells;
}

std::vector<Composition> compositions(int n) {
  if (n < 0) throw std::invalid_argument("compositions of a negative number");
  std::vector<std::vector<Composition>> table(static_cast<std::size_t>(n) + 1);
  table[0] = {Composition{}};
  for (int m = 1; m <= n; ++m) {
    auto& out = table[static_cast<std::size_t>(m)];
    for (int k = m; k >= 1; --k) {
      for (const auto& rest : table[static_cast<std::size_t>(m - k)]) {
        std::vector<int> p{k};
        p.insert(p.end(), rest.begin(), rest.end());
        out.emplace_back(std::move(p));
      }
    }
  }
  return table[static_cast<std::size_t>(n)];
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

Partition sort_comp(const Composition& alpha) { return Partition::sorted(alpha.parts()); }

Truncation truncate(const Composition& beta) { return {beta.truncated(), beta.last()}; }

int multiplicity(const Partition& lambda, int i) {
  return static_cast<int>(std::count(lambda.begin(), lambda.end(), i));
}

std::map<int, int> multiplicities(const Partition& lambda) {
  std::map<int, int> m;
  for (int p : lambda) ++m[p];
  return m;
}

namespace {

Partition from_multiplicities(const std::map<int, int>& m) {
  std::vector<int> parts;
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    parts.insert(parts.end(), static_cast<std::size_t>(std::max(it->second, 0)), it->first);
  return Partition(std::move(parts));
}

template <typename Op>
Partition combine(const Partition& a, const Partition& b, Op op) {
  auto ma = multiplicities(a);
  auto mb = multiplicities(b);
  std::map<int, int> out;
  for (const auto& [k, v] : ma) out[k] = op(v, mb.count(k) ? mb[k] : 0);
  for (const auto& [k, v] : mb)
    if (!ma.count(k)) out[k] = op(0, v);
  return from_multiplicities(out);
}

}  // namespace

Partition multiset_union(const Partition& a, const Partition& b) {
  return combine(a, b, [](int x, int y) { return x + y; });
}

Partition multiset_intersection(const Partition& a, const Partition& b) {
  return combine(a, b, [](int x, int y) { return std::min(x, y); });
}

Partition multiset_difference(const Partition& a, const Partition& b) {
  return combine(a, b, [](int x, int y) { return std::max(x - y, 0); });
}

bool multiset_subset(const Partition& a, const Partition& b) {
  auto mb = multiplicities(b);
  for (const auto& [k, v] : multiplicities(a))
    if (v > mb[k]) return false;
  return true;
}

MultisetOps multiset_ops(const Partition& lambda, const Partition& mu) {
  return {multiset_union(lambda, mu), multiset_intersection(lambda, mu),
          multiset_difference(lambda, mu), multiset_subset(lambda, mu)};
}

Composition parse_composition(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && !std::isspace(static_cast<unsigned char>(ch)))
      s += ch;
  std::vector<int> parts;
  if (s.empty()) return Composition{};
  if (s.find(',') == std::string::npos) {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("malformed composition '" + text + "'");
      parts.push_back(ch - '0');
    }
    return Composition(std::move(parts));
  }
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("malformed composition '" + text + "'");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Composition(std::move(parts));
}

Partition parse_partition(const std::string& text) { return Partition(parse_composition(text)); }

}  // namespace locinv
