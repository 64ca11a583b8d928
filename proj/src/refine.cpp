#include "locinv/refine.hpp"

#include <stdexcept>

#include "locinv/scalars.hpp"

namespace locinv {

bool refines(const Composition& alpha, const Composition& beta) {
  if (alpha.size() != beta.size()) return false;
  int partial = 0;
  std::size_t k = 0;
  for (int a : alpha) {
    partial += a;
    if (partial == beta[k]) {
      partial = 0;
      ++k;
    } else if (partial > beta[k]) {
      return false;
    }
  }
  return k == static_cast<std::size_t>(beta.length());
}

int CBT::sign() const {
  return (content.length() - shape.length()) % 2 == 0 ? 1 : -1;
}

Filling CBT::filling() const {
  Filling f = Filling::blank(shape);
  for (const auto& b : bricks)
    for (int c = 0; c < b.len; ++c) f.set({b.row, b.start_col + c}, b.label);
  return f;
}

std::vector<Composition> CBT::row_contents() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  for (const auto& b : bricks) rows[static_cast<std::size_t>(b.row - 1)].push_back(b.len);
  std::vector<Composition> out;
  for (auto& r : rows) out.emplace_back(std::move(r));
  return out;
}

std::optional<CBT> cbt_find(const Composition& shape, const Composition& content) {
  if (shape.size() != content.size()) throw std::invalid_argument("shape and content sizes differ");
  if (!refines(content, shape)) return std::nullopt;
  CBT t{shape, content, {}};
  int row = 1, col = 1;
  for (int k = 1; k <= content.length(); ++k) {
    const int len = content[static_cast<std::size_t>(k - 1)];
    t.bricks.push_back({k, row, col, len, col == 1 ? 1 : -1});
    col += len;
    if (col > shape[static_cast<std::size_t>(row - 1)]) {
      ++row;
      col = 1;
    }
  }
  return t;
}

namespace {

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

template <typename Fn>
IndexedMatrix square_over_compositions(int n, Fn entry) {
  const auto keys = compositions(n);
  IndexedMatrix m(keys, keys);
  for (std::size_t r = 0; r < keys.size(); ++r)
    for (std::size_t c = 0; c < keys.size(); ++c) m.at(r, c) = entry(keys[r], keys[c]);
  return m;
}

std::vector<Composition> prefix_for_suffix_sum(const Composition& lambda, int L) {
  int suffix = 0;
  for (int k = lambda.length(); k >= 1; --k) {
    suffix += lambda[static_cast<std::size_t>(k - 1)];
    if (suffix == L)
      return {Composition(std::vector<int>(lambda.begin(), lambda.begin() + (k - 1)))};
    if (suffix > L) break;
  }
  return {};
}

std::vector<Composition> lower_last_part(const Composition& mu, int L) {
  if (mu.empty() || L > mu.last()) return {};
  if (L == mu.last()) return {mu.truncated()};
  return {mu.truncated().appended(mu.last() - L)};
}

int lowering_sign(const Composition& mu, const Composition& delta) {
  return delta.length() < mu.length() ? 1 : -1;
}

}  // namespace

IndexedMatrix incidence_A(int n) {
  return square_over_compositions(n, [](const Composition& l, const Composition& b) -> Rational {
    return Rational(refines(l, b) ? 1 : 0);
  });
}

IndexedMatrix mobius_B(int n) {
  return square_over_compositions(n, [](const Composition& b, const Composition& m) -> Rational {
    return Rational(refines(b, m) ? parity_sign(b.length() - m.length()) : 0);
  });
}

LocalSystem refine_system() {
  LocalSystem sys;
  sys.name = "refine";
  sys.shapes = [](int n) { return compositions(n); };
  sys.succ_a = prefix_for_suffix_sum;
  sys.succ_b = lower_last_part;
  sys.weight_a = [](const Composition&, const Composition&) { return Rational(1); };
  sys.weight_b = [](const Composition& mu, const Composition& delta) {
    return Rational(lowering_sign(mu, delta));
  };
  return sys;
}

std::vector<SignedShape> local_g_refine(const Composition& lambda, const Composition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("shapes of different sizes");
  if (lambda.size() == 0) throw std::invalid_argument("local identity needs n > 0");
  const int k = mu.length();
  for (int i = 0; i < k - 1; ++i)
    if (i >= lambda.length() || lambda[static_cast<std::size_t>(i)] != mu[static_cast<std::size_t>(i)])
      return {};
  std::vector<SignedShape> g{{mu.truncated(), 1}};
  if (lambda.length() >= k && lambda[static_cast<std::size_t>(k - 1)] < mu.last())
    g.push_back({mu.truncated().appended(lambda[static_cast<std::size_t>(k - 1)]), -1});
  return g;
}

IndexedMatrix self_inverse_matrix(int n) {
  return square_over_compositions(n, [n](const Composition& l, const Composition& b) {
    return Rational(refines(l, b) ? parity_sign(n - l.length()) : 0);
  });
}

std::pair<BigInt, BigInt> weighted_factors(const Composition& shape, const Composition& content) {
  if (shape.size() != content.size()) throw std::invalid_argument("shape and content sizes differ");
  auto t = cbt_find(shape, content);
  if (!t) throw std::invalid_argument("content does not refine shape");
  BigInt z = 1, l = 1;
  for (const auto& row : t->row_contents()) {
    z *= big_z(row);
    l *= row.last();
  }
  return {z, l};
}

LocalSystem weighted_system() {
  LocalSystem sys = refine_system();
  sys.name = "refine-weighted";
  sys.weight_a = [](const Composition& lambda, const Composition&) { return Rational(lambda.last()); };
  sys.weight_b = [](const Composition& mu, const Composition& delta) {
    return Rational(lowering_sign(mu, delta), mu.last());
  };
  return sys;
}

IndexedMatrix weighted_A(int n) {
  return square_over_compositions(n, [](const Composition& l, const Composition& b) -> Rational {
    if (!refines(l, b)) return Rational(0);
    return Rational(weighted_factors(b, l).second);
  });
}

IndexedMatrix weighted_B(int n) {
  return square_over_compositions(n, [](const Composition& b, const Composition& m) -> Rational {
    if (!refines(b, m)) return Rational(0);
    return Rational(parity_sign(b.length() - m.length())) / Rational(weighted_factors(m, b).first);
  });
}

IndexedMatrix nsym_h_in_psi(int n) {
  return square_over_compositions(n, [](const Composition& b, const Composition& l) -> Rational {
    if (!refines(l, b)) return Rational(0);
    return Rational(1) / Rational(weighted_factors(b, l).first);
  });
}

IndexedMatrix nsym_psi_in_h(int n) {
  return square_over_compositions(n, [](const Composition& m, const Composition& b) -> Rational {
    if (!refines(b, m)) return Rational(0);
    return Rational(parity_sign(m.length() - b.length())) * Rational(weighted_factors(m, b).second);
  });
}

}  // namespace locinv
