#include "locinv/rimhook.hpp"

#include <algorithm>
#include <stdexcept>

namespace locinv {

Abacus Abacus::from_partition(const Partition& lambda, int beads) {
  if (beads < lambda.length())
    throw std::invalid_argument("abacus needs at least l(lambda) beads");
  Abacus a;
  a.beads_ = beads;
  a.word_.assign(static_cast<std::size_t>(beads + lambda.size() + 1), 0);
  for (int r = 1; r <= beads; ++r)
    a.word_[static_cast<std::size_t>(lambda.part_or_zero(r - 1) + beads - r)] = 1;
  return a;
}

Abacus Abacus::from_word(const std::string& word) {
  Abacus a;
  for (char ch : word) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("abacus word must be 0/1");
    a.word_.push_back(ch == '1' ? 1 : 0);
    a.beads_ += ch == '1';
  }
  return a;
}

int Abacus::beads_between(int a, int b) const noexcept {
  if (a > b) std::swap(a, b);
  int count = 0;
  for (int p = a + 1; p < b; ++p) count += bead(p);
  return count;
}

Partition Abacus::decode() const {
  std::vector<int> parts;
  int r = 0;
  for (int p = static_cast<int>(word_.size()) - 1; p >= 0; --p) {
    if (!word_[static_cast<std::size_t>(p)]) continue;
    ++r;
    parts.push_back(p - (beads_ - r));
  }
  return trimmed_partition(std::move(parts));
}

std::pair<Abacus, int> Abacus::move_bead(int from, int to) const {
  if (from < 0 || to < 0) throw std::invalid_argument("abacus positions are nonnegative");
  if (!bead(from)) throw std::invalid_argument("no bead at position " + std::to_string(from));
  if (bead(to)) throw std::invalid_argument("position " + std::to_string(to) + " is occupied");
  Abacus out = *this;
  if (to >= static_cast<int>(out.word_.size())) out.word_.resize(static_cast<std::size_t>(to) + 1, 0);
  out.word_[static_cast<std::size_t>(from)] = 0;
  out.word_[static_cast<std::size_t>(to)] = 1;
  const int sign = beads_between(from, to) % 2 == 0 ? 1 : -1;
  return {std::move(out), sign};
}

std::string Abacus::word() const {
  std::string out;
  std::size_t end = word_.size();
  while (end > 0 && !word_[end - 1]) --end;
  for (std::size_t p = 0; p < end; ++p) out += word_[p] ? '1' : '0';
  return out;
}

std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
  std::vector<Cell> cells;
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = inner.part_or_zero(r - 1) + 1; c <= outer[static_cast<std::size_t>(r - 1)]; ++c)
      cells.push_back({r, c});
  return cells;
}

bool is_rimhook_removal(const Partition& nu, const Partition& gamma) {
  if (!nu.contains(gamma) || nu == gamma) return false;
  int top = -1, bottom = -1;
  for (int r = 0; r < nu.length(); ++r) {
    if (gamma.part_or_zero(r) == nu.part_or_zero(r)) continue;
    if (top < 0) top = r;
    bottom = r;
  }
  for (int r = top; r < bottom; ++r)
    if (gamma.part_or_zero(r) != nu.part_or_zero(r + 1) - 1) return false;
  return true;
}

int rimhook_sign(const Partition& nu, const Partition& gamma) {
  return rows_occupied(nu, gamma) % 2 == 1 ? 1 : -1;
}

std::vector<RimHook> rimhook_removals(const Partition& lambda, int L) {
  std::vector<RimHook> out;
  if (L < 1 || L > lambda.size()) return out;
  const Abacus ab = Abacus::from_partition(lambda, lambda.length());
  for (int i = L; i < lambda.size() + lambda.length() + 1; ++i) {
    if (!ab.bead(i) || ab.bead(i - L)) continue;
    auto [moved, sign] = ab.move_bead(i, i - L);
    RimHook h;
    h.remainder = moved.decode();
    h.cells = skew_cells(lambda, h.remainder);
    h.sign = sign;
    out.push_back(std::move(h));
  }
  return out;
}

RimHook border_rimhook_of_cell(const Partition& nu, int c) {
  if (c < 1 || c > nu.size()) throw std::invalid_argument("cell number out of range");
  int i = 1, j = c;
  while (j > nu[static_cast<std::size_t>(i - 1)]) {
    j -= nu[static_cast<std::size_t>(i - 1)];
    ++i;
  }
  const int b = nu.column_length(j);
  std::vector<int> parts(nu.parts());
  for (int r = i; r < b; ++r) parts[static_cast<std::size_t>(r - 1)] = nu[static_cast<std::size_t>(r)] - 1;
  parts[static_cast<std::size_t>(b - 1)] = j - 1;
  RimHook h;
  h.remainder = trimmed_partition(std::move(parts));
  h.cells = skew_cells(nu, h.remainder);
  h.sign = (b - i) % 2 == 0 ? 1 : -1;
  return h;
}

int border_number(const Partition& nu, const Partition& gamma) {
  if (!is_rimhook_removal(nu, gamma)) throw std::invalid_argument("not a removable rim-hook");
  int top = 0;
  while (gamma.part_or_zero(top) == nu.part_or_zero(top)) ++top;
  int bottom = nu.length() - 1;
  while (gamma.part_or_zero(bottom) == nu.part_or_zero(bottom)) --bottom;
  int before = 0;
  for (int r = 0; r < top; ++r) before += nu[static_cast<std::size_t>(r)];
  return before + gamma.part_or_zero(bottom) + 1;
}

namespace {

std::vector<SignedFilling> rht_rec(const Partition& lambda, const Composition& beta) {
  if (beta.empty()) return {SignedFilling{Filling::blank(lambda), 1}};
  const auto [rest, L] = truncate(beta);
  std::vector<SignedFilling> out;
  for (const auto& hook : rimhook_removals(lambda, L))
    for (const auto& inner : rht_rec(hook.remainder, rest))
      out.push_back({extend_filling(inner.filling, lambda, beta.length()), inner.sign * hook.sign});
  return out;
}

}  // namespace

std::vector<SignedFilling> enumerate_rht(const Partition& lambda, const Composition& beta) {
  if (lambda.size() != beta.size()) throw std::invalid_argument("shape and content sizes differ");
  auto out = rht_rec(lambda, beta);
  std::sort(out.begin(), out.end(),
            [](const SignedFilling& a, const SignedFilling& b) { return filling_less(a.filling, b.filling); });
  return out;
}

std::optional<int> rht_sign(const Filling& f, const Partition& lambda, const Composition& beta) {
  if (f.shape != lambda.composition() || !f.congruent() || lambda.size() != beta.size())
    return std::nullopt;
  for (const auto& row : f.rows)
    for (int v : row)
      if (v < 1 || v > beta.length()) return std::nullopt;
  Partition shape = lambda;
  int sign = 1;
  for (int k = beta.length(); k >= 1; --k) {
    std::vector<int> parts;
    for (int r = 0; r < shape.length(); ++r) {
      const auto& row = f.rows[static_cast<std::size_t>(r)];
      int keep = shape[static_cast<std::size_t>(r)];
      while (keep > 0 && row[static_cast<std::size_t>(keep - 1)] == k) --keep;
      for (int c = 0; c < keep; ++c)
        if (row[static_cast<std::size_t>(c)] == k) return std::nullopt;
      parts.push_back(keep);
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>{})) return std::nullopt;
    Partition gamma = trimmed_partition(std::move(parts));
    if (shape.size() - gamma.size() != beta[static_cast<std::size_t>(k - 1)]) return std::nullopt;
    if (!is_rimhook_removal(shape, gamma)) return std::nullopt;
    sign *= rimhook_sign(shape, gamma);
    shape = gamma;
  }
  return sign;
}

LocalSystem rimhook_system() {
  LocalSystem sys;
  sys.name = "rimhook";
  sys.shapes = [](int n) { return as_keys(partitions(n)); };
  auto succ = [](const Composition& shape, int L) {
    std::vector<Composition> out;
    for (const auto& h : rimhook_removals(Partition(shape), L)) out.push_back(h.remainder);
    return out;
  };
  sys.succ_a = succ;
  sys.succ_b = succ;
  sys.weight_a = [](const Composition& lambda, const Composition& gamma) {
    return Rational(rimhook_sign(Partition(lambda), Partition(gamma)));
  };
  sys.weight_b = [](const Composition& mu, const Composition& delta) {
    return Rational(rimhook_sign(Partition(mu), Partition(delta)), mu.size());
  };
  return sys;
}

namespace {

struct Jump {
  int i = 0;  // bead moving down to i - L
  int j = 0;  // bead moving up to j + L
  int L = 0;
};

std::optional<RimhookWay> execute(const Abacus& from, const Abacus& target, const Jump& w) {
  if (w.L < 1 || w.i - w.L < 0 || !from.bead(w.i) || from.bead(w.i - w.L)) return std::nullopt;
  auto [mid, s1] = from.move_bead(w.i, w.i - w.L);
  if (!mid.bead(w.j) || mid.bead(w.j + w.L)) return std::nullopt;
  auto [end, s2] = mid.move_bead(w.j, w.j + w.L);
  if (!(end == target)) return std::nullopt;
  return RimhookWay{mid.decode(), w.L, s1, s2};
}

/// The second two-step route, by the relative position of i and j.
Jump other_route(const Jump& w) {
  if (w.i < w.j || w.i - w.j < w.L) return {w.j, w.i, w.j - w.i + w.L};
  return {w.i, w.j, w.i - w.j - w.L};
}

Partition intersection(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  for (int r = 0; r < std::min(a.length(), b.length()); ++r)
    parts.push_back(std::min(a[static_cast<std::size_t>(r)], b[static_cast<std::size_t>(r)]));
  return Partition(std::move(parts));
}

}  // namespace

RimhookPairing rimhook_pair(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("shapes of different sizes");
  if (lambda.size() == 0) throw std::invalid_argument("local identity needs n > 0");
  RimhookPairing out;
  if (lambda == mu) {
    out.kind = RimhookPairing::Kind::Diagonal;
    for (int c = 1; c <= lambda.size(); ++c) {
      auto h = border_rimhook_of_cell(lambda, c);
      out.ways.push_back({h.remainder, h.size(), h.sign, h.sign});
    }
    return out;
  }
  const int N = std::max(lambda.length(), mu.length());
  const Abacus al = Abacus::from_partition(lambda, N);
  const Abacus am = Abacus::from_partition(mu, N);
  std::vector<int> x, y;
  for (int p = 0; p <= N + lambda.size(); ++p) {
    if (al.bead(p) && !am.bead(p)) x.push_back(p);
    if (!al.bead(p) && am.bead(p)) y.push_back(p);
  }
  if (x.size() != 2 || y.size() != 2) return out;

  std::optional<Jump> first;
  std::optional<RimhookWay> first_way;
  for (int a = 0; a < 2 && !first; ++a) {
    for (int c = 0; c < 2 && !first; ++c) {
      Jump w{x[static_cast<std::size_t>(a)], x[static_cast<std::size_t>(1 - a)],
             x[static_cast<std::size_t>(a)] - y[static_cast<std::size_t>(c)]};
      if (auto way = execute(al, am, w)) {
        first = w;
        first_way = way;
      }
    }
  }
  if (!first) return out;
  auto second_way = execute(al, am, other_route(*first));
  if (!second_way) throw InternalError("rim-hook pairing: second route is not executable");
  if (second_way->product() != -first_way->product())
    throw InternalError("rim-hook pairing: routes have equal signs");
  out.kind = RimhookPairing::Kind::Matched;
  if (second_way->gamma == intersection(lambda, mu)) std::swap(first_way, second_way);
  out.ways = {*first_way, *second_way};
  return out;
}

Partition rimhook_partner(const Partition& lambda, const Partition& mu, const Partition& gamma) {
  if (lambda == mu) throw std::invalid_argument("rimhook_partner needs lambda != mu");
  const auto res = rimhook_pair(lambda, mu);
  if (res.kind == RimhookPairing::Kind::Matched) {
    if (res.ways[0].gamma == gamma) return res.ways[1].gamma;
    if (res.ways[1].gamma == gamma) return res.ways[0].gamma;
  }
  throw std::invalid_argument("gamma is not in G(lambda, mu)");
}

}  // namespace locinv
