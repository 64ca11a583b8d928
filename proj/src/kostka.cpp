#include "locinv/kostka.hpp"

#include <algorithm>
#include <stdexcept>

namespace locinv {

Partition trimmed_partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

bool is_horizontal_strip(const Partition& lambda, const Partition& gamma) {
  if (!lambda.contains(gamma)) return false;
  for (int i = 0; i < lambda.length(); ++i)
    if (gamma.part_or_zero(i) < lambda.part_or_zero(i + 1)) return false;
  return true;
}

int rows_occupied(const Partition& lambda, const Partition& gamma) {
  int r = 0;
  for (int i = 0; i < lambda.length(); ++i)
    if (gamma.part_or_zero(i) < lambda.part_or_zero(i)) ++r;
  return r;
}

namespace {

void strips_rec(const Partition& lambda, int row, int remaining, std::vector<int>& gamma,
                std::vector<Partition>& out) {
  if (row == lambda.length()) {
    if (remaining == 0) out.push_back(trimmed_partition(gamma));
    return;
  }
  const int hi = lambda.part_or_zero(row);
  const int lo = lambda.part_or_zero(row + 1);
  for (int g = hi; g >= lo; --g) {
    if (hi - g > remaining) break;
    gamma.push_back(g);
    strips_rec(lambda, row + 1, remaining - (hi - g), gamma, out);
    gamma.pop_back();
  }
}

}  // namespace

std::vector<Partition> horizontal_strip_removals(const Partition& lambda, int L) {
  std::vector<Partition> out;
  if (L < 0 || L > lambda.size()) return out;
  std::vector<int> gamma;
  strips_rec(lambda, 0, L, gamma, out);
  return out;
}

std::vector<SpecialRimHook> special_rimhooks(const Partition& mu) {
  const int s = mu.length();
  std::vector<SpecialRimHook> hooks;
  for (int i = 1; i <= s; ++i) {
    std::vector<int> parts(mu.parts());
    for (int r = i; r < s; ++r) parts[static_cast<std::size_t>(r - 1)] = mu[static_cast<std::size_t>(r)] - 1;
    parts[static_cast<std::size_t>(s - 1)] = 0;
    SpecialRimHook h;
    h.row = i;
    h.size = mu[static_cast<std::size_t>(i - 1)] + s - i;
    h.sign = (s - i) % 2 == 0 ? 1 : -1;
    h.remainder = trimmed_partition(std::move(parts));
    hooks.push_back(std::move(h));
  }
  return hooks;
}

std::optional<SpecialRimHook> special_rimhook_of_size(const Partition& mu, int L) {
  for (auto& h : special_rimhooks(mu))
    if (h.size == L) return h;
  return std::nullopt;
}

bool is_ssyt(const Filling& f, const Partition& lambda, const Composition& beta) {
  if (f.shape != lambda.composition() || !f.congruent()) return false;
  for (const auto& row : f.rows)
    for (int v : row)
      if (v < 1) return false;
  if (f.content() != beta.parts()) return false;
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    for (std::size_t j = 0; j < f.rows[i].size(); ++j) {
      if (j > 0 && f.rows[i][j - 1] > f.rows[i][j]) return false;
      if (i > 0 && f.rows[i - 1][j] >= f.rows[i][j]) return false;
    }
  }
  return true;
}

namespace {

void require_same_size(const Composition& a, const Composition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("shape and content sizes differ");
}

std::vector<Filling> ssyt_rec(const Partition& lambda, const Composition& beta) {
  if (beta.empty()) return {Filling::blank(lambda)};
  const auto [rest, L] = truncate(beta);
  std::vector<Filling> out;
  for (const auto& gamma : horizontal_strip_removals(lambda, L))
    for (const auto& inner : ssyt_rec(gamma, rest)) out.push_back(extend_filling(inner, lambda, beta.length()));
  return out;
}

}  // namespace

std::vector<Filling> enumerate_ssyt(const Partition& lambda, const Composition& beta) {
  require_same_size(lambda, beta);
  auto out = ssyt_rec(lambda, beta);
  std::sort(out.begin(), out.end(), filling_less);
  return out;
}

std::optional<SignedFilling> srht_find(const Partition& mu, const Composition& beta) {
  require_same_size(mu, beta);
  Filling f = Filling::blank(mu);
  Partition shape = mu;
  int sign = 1;
  for (int k = beta.length(); k >= 1; --k) {
    auto hook = special_rimhook_of_size(shape, beta[static_cast<std::size_t>(k - 1)]);
    if (!hook) return std::nullopt;
    for (int r = 0; r < shape.length(); ++r)
      for (int c = hook->remainder.part_or_zero(r); c < shape[static_cast<std::size_t>(r)]; ++c)
        f.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = k;
    sign *= hook->sign;
    shape = hook->remainder;
  }
  return SignedFilling{std::move(f), sign};
}

std::optional<int> srht_sign(const Filling& f, const Partition& mu, const Composition& beta) {
  if (f.shape != mu.composition() || !f.congruent() || mu.size() != beta.size()) return std::nullopt;
  auto expected = srht_find(mu, beta);
  if (!expected || expected->filling != f) return std::nullopt;
  return expected->sign;
}

LocalSystem kostka_system() {
  LocalSystem sys;
  sys.name = "kostka";
  sys.shapes = [](int n) { return as_keys(partitions(n)); };
  sys.succ_a = [](const Composition& lambda, int L) {
    return as_keys(horizontal_strip_removals(Partition(lambda), L));
  };
  sys.succ_b = [](const Composition& mu, int L) {
    std::vector<Composition> out;
    if (auto h = special_rimhook_of_size(Partition(mu), L)) out.push_back(h->remainder);
    return out;
  };
  sys.weight_a = [](const Composition&, const Composition&) { return Rational(1); };
  sys.weight_b = [](const Composition& mu, const Composition& delta) {
    const int r = rows_occupied(Partition(mu), Partition(delta));
    return Rational(r % 2 == 1 ? 1 : -1);
  };
  return sys;
}

namespace {

bool in_g(const Partition& lambda, const SpecialRimHook& h) {
  return is_horizontal_strip(lambda, h.remainder) && h.remainder.size() < lambda.size();
}

void check_sizes(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("shapes of different sizes");
  if (lambda.size() == 0) throw std::invalid_argument("local identity needs n > 0");
}

/// Index (1-based) of the partner hook, by the case analysis at c = (i, mu_i).
int partner_row(const Partition& lambda, const Partition& mu, int i) {
  const int s = mu.length();
  if (lambda.part_or_zero(i - 1) >= mu[static_cast<std::size_t>(i - 1)]) {
    if (i == s) throw InternalError("kostka pairing: c in lambda with i = s");
    return i + 1;
  }
  if (i == 1) throw InternalError("kostka pairing: c outside lambda with i = 1");
  return i - 1;
}

}  // namespace

KostkaPairing kostka_pair(const Partition& lambda, const Partition& mu) {
  check_sizes(lambda, mu);
  KostkaPairing out;
  if (lambda == mu) {
    out.kind = KostkaPairing::Kind::Diagonal;
    out.first = Partition(lambda.composition().truncated());
    out.first_sign = 1;
    return out;
  }
  const auto hooks = special_rimhooks(mu);
  for (const auto& h : hooks) {
    if (!in_g(lambda, h)) continue;
    const auto& other = hooks[static_cast<std::size_t>(partner_row(lambda, mu, h.row) - 1)];
    if (!in_g(lambda, other)) throw InternalError("kostka pairing: partner not in G");
    out.kind = KostkaPairing::Kind::Matched;
    out.first = h.remainder;
    out.first_sign = h.sign;
    out.second = other.remainder;
    out.second_sign = other.sign;
    return out;
  }
  return out;
}

Partition kostka_partner(const Partition& lambda, const Partition& mu, const Partition& gamma) {
  check_sizes(lambda, mu);
  if (lambda == mu) throw std::invalid_argument("kostka_partner needs lambda != mu");
  const auto hooks = special_rimhooks(mu);
  for (const auto& h : hooks) {
    if (h.remainder != gamma) continue;
    if (!in_g(lambda, h)) break;
    const auto& other = hooks[static_cast<std::size_t>(partner_row(lambda, mu, h.row) - 1)];
    if (!in_g(lambda, other)) throw InternalError("kostka pairing: partner not in G");
    return other.remainder;
  }
  throw std::invalid_argument("gamma is not in G(lambda, mu)");
}

}  // namespace locinv
