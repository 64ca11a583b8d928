#include "locinv/framework.hpp"

#include <algorithm>
#include <stdexcept>

namespace locinv {

namespace {

bool is_partition(const Composition& c) {
  return std::is_sorted(c.begin(), c.end(), std::greater<>{});
}

using SuccFn = std::function<std::vector<Composition>(const Composition&, int)>;

class SuccCache {
 public:
  explicit SuccCache(const SuccFn& fn) : fn_(fn) {}
  const std::vector<Composition>& get(const Composition& shape, int L) {
    auto key = std::make_pair(shape, L);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, fn_(shape, L)).first;
    return it->second;
  }

 private:
  const SuccFn& fn_;
  std::map<std::pair<Composition, int>, std::vector<Composition>> cache_;
};

IndexedMatrix base_matrix() {
  return IndexedMatrix::identity({Composition{}});
}

}  // namespace

const IndexedMatrix& MatrixFamily::A(int n) {
  if (n < 0) throw std::invalid_argument("matrix size must be nonnegative");
  if (auto it = a_.find(n); it != a_.end()) return it->second;
  if (n == 0) return a_.emplace(0, base_matrix()).first->second;
  for (int m = 0; m < n; ++m) A(m);

  IndexedMatrix out(sys_.shapes(n), compositions(n));
  SuccCache succ(sys_.succ_a);
  for (std::size_t r = 0; r < out.num_rows(); ++r) {
    const Composition& lambda = out.row_keys()[r];
    for (std::size_t c = 0; c < out.num_cols(); ++c) {
      const auto [rest, L] = truncate(out.col_keys()[c]);
      const IndexedMatrix& prev = a_.at(n - L);
      Rational sum = 0;
      for (const auto& gamma : succ.get(lambda, L)) {
        const Rational& entry = prev(gamma, rest);
        if (entry != 0) sum += sys_.weight_a(lambda, gamma) * entry;
      }
      out.at(r, c) = sum;
    }
  }
  return a_.emplace(n, std::move(out)).first->second;
}

const IndexedMatrix& MatrixFamily::B(int n) {
  if (n < 0) throw std::invalid_argument("matrix size must be nonnegative");
  if (auto it = b_.find(n); it != b_.end()) return it->second;
  if (n == 0) return b_.emplace(0, base_matrix()).first->second;
  for (int m = 0; m < n; ++m) B(m);

  IndexedMatrix out(compositions(n), sys_.shapes(n));
  SuccCache succ(sys_.succ_b);
  for (std::size_t c = 0; c < out.num_cols(); ++c) {
    const Composition& mu = out.col_keys()[c];
    for (std::size_t r = 0; r < out.num_rows(); ++r) {
      const auto [rest, L] = truncate(out.row_keys()[r]);
      const IndexedMatrix& prev = b_.at(n - L);
      Rational sum = 0;
      for (const auto& delta : succ.get(mu, L)) {
        const Rational& entry = prev(rest, delta);
        if (entry != 0) sum += sys_.weight_b(mu, delta) * entry;
      }
      out.at(r, c) = sum;
    }
  }
  return b_.emplace(n, std::move(out)).first->second;
}

IndexedMatrix build_A(const LocalSystem& sys, int n) {
  MatrixFamily family(sys);
  return family.A(n);
}

IndexedMatrix build_B(const LocalSystem& sys, int n) {
  MatrixFamily family(sys);
  return family.B(n);
}

std::vector<LocalTerm> local_terms(const LocalSystem& sys, const Composition& lambda,
                                   const Composition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("local identity needs shapes of equal size");
  if (lambda.size() == 0) throw std::invalid_argument("local identity needs n > 0");
  std::vector<LocalTerm> terms;
  for (int L = 1; L <= lambda.size(); ++L) {
    auto s = sys.succ_a(lambda, L);
    auto t = sys.succ_b(mu, L);
    std::sort(s.begin(), s.end());
    std::sort(t.begin(), t.end());
    std::vector<Composition> common;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(common));
    for (auto& gamma : common) {
      LocalTerm term;
      term.weight_a = sys.weight_a(lambda, gamma);
      term.weight_b = sys.weight_b(mu, gamma);
      term.L = L;
      term.gamma = std::move(gamma);
      terms.push_back(std::move(term));
    }
  }
  return terms;
}

Rational local_lhs(const LocalSystem& sys, const Composition& lambda, const Composition& mu) {
  Rational sum = 0;
  for (const auto& term : local_terms(sys, lambda, mu)) sum += term.product();
  return sum;
}

LocalReport verify_local(const LocalSystem& sys, int n) {
  if (n < 1) throw std::invalid_argument("verify_local needs n >= 1");
  LocalReport report;
  report.n = n;
  const auto shapes = sys.shapes(n);
  for (const auto& lambda : shapes) {
    for (const auto& mu : shapes) {
      ++report.pairs_checked;
      Rational value = local_lhs(sys, lambda, mu);
      if (value != (lambda == mu ? 1 : 0)) report.violations.push_back({lambda, mu, value});
    }
  }
  return report;
}

bool verify_inversion(MatrixFamily& family, int n) {
  return (family.A(n) * family.B(n)).is_identity();
}

bool verify_inversion(const LocalSystem& sys, int n) {
  MatrixFamily family(sys);
  return verify_inversion(family, n);
}

bool check_sorting_condition(const IndexedMatrix& a) {
  std::map<Partition, std::size_t> first_col;
  for (std::size_t c = 0; c < a.num_cols(); ++c) {
    auto [it, fresh] = first_col.emplace(sort_comp(a.col_keys()[c]), c);
    if (fresh) continue;
    for (std::size_t r = 0; r < a.num_rows(); ++r)
      if (a.at(r, c) != a.at(r, it->second)) return false;
  }
  return true;
}

IndexedMatrix square_restrict_A(const IndexedMatrix& a) {
  if (!check_sorting_condition(a))
    throw std::invalid_argument("sorting condition fails; no square restriction");
  std::vector<std::size_t> rows, cols;
  std::vector<Composition> row_keys, col_keys;
  for (std::size_t r = 0; r < a.num_rows(); ++r)
    if (is_partition(a.row_keys()[r])) {
      rows.push_back(r);
      row_keys.push_back(a.row_keys()[r]);
    }
  for (std::size_t c = 0; c < a.num_cols(); ++c)
    if (is_partition(a.col_keys()[c])) {
      cols.push_back(c);
      col_keys.push_back(a.col_keys()[c]);
    }
  IndexedMatrix out(row_keys, col_keys);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = a.at(rows[i], cols[j]);
  return out;
}

IndexedMatrix square_fold_B(const IndexedMatrix& b) {
  if (b.num_rows() == 0) throw std::invalid_argument("cannot fold an empty matrix");
  const int n = b.row_keys().front().size();
  IndexedMatrix out(as_keys(partitions(n)), b.col_keys());
  for (std::size_t r = 0; r < b.num_rows(); ++r) {
    const std::size_t target = *out.row_index(sort_comp(b.row_keys()[r]));
    for (std::size_t c = 0; c < b.num_cols(); ++c) out.at(target, c) += b.at(r, c);
  }
  return out;
}

}  // namespace locinv
