#include "locinv/involutions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "locinv/kostka.hpp"
#include "locinv/rational.hpp"

namespace locinv {

namespace {

Composition content_of(const Filling& f) {
  const auto counts = f.content();
  return Composition(counts);
}

Partition shape_of(const Filling& f) { return Partition(f.shape); }

// Copies base into dg(original.shape); cells of original labeled above k
// are restored with labels shifted so that k+1 becomes k_new+1.
Filling restore_outer(const Filling& base, const Filling& original, int k, int k_new) {
  Filling out = Filling::blank(original.shape);
  for (std::size_t i = 0; i < base.rows.size(); ++i)
    std::copy(base.rows[i].begin(), base.rows[i].end(), out.rows[i].begin());
  for (std::size_t i = 0; i < original.rows.size(); ++i)
    for (std::size_t j = 0; j < original.rows[i].size(); ++j)
      if (original.rows[i][j] > k) out.rows[i][j] = original.rows[i][j] - k + k_new;
  return out;
}

std::string state(const Filling& s, const Filling& t) { return "S=" + s.str() + " T=" + t.str(); }

std::string state(const Filling& s, const Filling& t, const Permutation& sigma) {
  return state(s, t) + " sigma=" + sigma.str();
}

std::string seq_str(const ChoiceSequence& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + ")";
}

int take_nth(std::set<int>& avail, int c) {
  auto it = avail.begin();
  std::advance(it, c - 1);
  const int x = *it;
  avail.erase(it);
  return x;
}

int rank_of(const std::set<int>& avail, int x) {
  auto it = avail.find(x);
  if (it == avail.end()) throw std::invalid_argument("element already used");
  return static_cast<int>(std::distance(avail.begin(), it)) + 1;
}

// Walks c from index pos, peeling border rim-hooks from shape; the first hook
// is given by first_cell when nonzero (so c supplies no entry for it).
RhtSurvivor build_survivor(const Partition& lambda, const ChoiceSequence& c, std::vector<int> ground,
                           int first_cell) {
  const int n = lambda.size();
  const int entries = first_cell ? n - 1 : n;
  if (static_cast<int>(c.size()) != std::max(entries, 0))
    throw std::invalid_argument("choice sequence has the wrong length");
  if (static_cast<int>(ground.size()) != n) throw std::invalid_argument("ground set has the wrong size");
  std::set<int> avail(ground.begin(), ground.end());
  if (static_cast<int>(avail.size()) != n) throw std::invalid_argument("ground set has repeated elements");

  std::vector<std::vector<Cell>> hooks;
  std::vector<std::vector<int>> cycles;
  Partition shape = lambda;
  std::size_t pos = 0;
  int remaining = n;
  auto next = [&](int bound) {
    const int v = c[pos++];
    if (v < 1 || v > bound) throw std::invalid_argument("choice sequence entry out of range");
    return v;
  };
  while (!shape.empty()) {
    const int cell = (first_cell && hooks.empty()) ? first_cell : next(remaining);
    const auto hook = border_rimhook_of_cell(shape, cell);
    std::vector<int> cycle{*avail.begin()};
    avail.erase(avail.begin());
    --remaining;
    for (int t = 1; t < hook.size(); ++t) {
      cycle.push_back(take_nth(avail, next(remaining)));
      --remaining;
    }
    hooks.push_back(hook.cells);
    cycles.push_back(std::move(cycle));
    shape = hook.remainder;
  }
  const int count = static_cast<int>(hooks.size());
  Filling S = Filling::blank(lambda);
  for (int h = 0; h < count; ++h)
    for (const auto& cell : hooks[static_cast<std::size_t>(h)]) S.set(cell, count - h);
  std::reverse(cycles.begin(), cycles.end());
  return {S, Permutation::from_cycles(std::move(ground), cycles)};
}

ChoiceSequence read_survivor(const Partition& lambda, const Filling& S, const Permutation& sigma) {
  const Composition beta = sigma.cyc_comp();
  if (!rht_sign(S, lambda, beta)) throw std::invalid_argument("S is not an RHT with content cycC(sigma)");
  const auto cycles = sigma.canonical_cycles();
  std::set<int> avail(sigma.ground().begin(), sigma.ground().end());
  ChoiceSequence c;
  Partition shape = lambda;
  for (int k = beta.length(); k >= 1; --k) {
    const Partition inner = shape_of(restrict_labels(S, k - 1));
    c.push_back(border_number(shape, inner));
    const auto& cycle = cycles[static_cast<std::size_t>(k - 1)];
    avail.erase(cycle.front());
    for (std::size_t t = 1; t < cycle.size(); ++t) {
      c.push_back(rank_of(avail, cycle[t]));
      avail.erase(cycle[t]);
    }
    shape = inner;
  }
  return c;
}

std::vector<int> default_ground(int n, const std::optional<std::vector<int>>& ground) {
  return ground ? *ground : iota_ground(n);
}

}  // namespace

Composition KostkaObject::content() const { return content_of(S); }

int KostkaObject::sign() const {
  const auto beta = content();
  if (!is_ssyt(S, lambda, beta)) throw std::invalid_argument("S is not an SSYT of shape lambda");
  const auto s = srht_sign(T, mu, beta);
  if (!s) throw std::invalid_argument("T is not an SRHT of shape mu with the content of S");
  return *s;
}

KostkaObject kostka_survivor(const Partition& lambda) {
  Filling f = Filling::blank(lambda);
  for (std::size_t i = 0; i < f.rows.size(); ++i)
    std::fill(f.rows[i].begin(), f.rows[i].end(), static_cast<int>(i) + 1);
  return {lambda, lambda, f, f};
}

KostkaOutcome kostka_involution(const KostkaObject& x) {
  x.sign();
  KostkaOutcome out;
  if (x.lambda == x.mu && x == kostka_survivor(x.lambda)) {
    out.fixed_point = true;
    out.image = x;
    return out;
  }
  const int ell = x.content().length();
  int k = ell;
  Filling s_prev, t_prev;
  for (; k >= 1; --k) {
    s_prev = restrict_labels(x.S, k - 1);
    t_prev = restrict_labels(x.T, k - 1);
    out.trace.push_back({"strip", state(restrict_labels(x.S, k), restrict_labels(x.T, k)), state(s_prev, t_prev)});
    if (s_prev.shape == t_prev.shape && kostka_survivor(shape_of(s_prev)) == KostkaObject{shape_of(s_prev), shape_of(s_prev), s_prev, t_prev})
      break;
  }
  if (k < 1) throw InternalError("no survivor reached while stripping");
  const Partition gamma = shape_of(s_prev);
  const Partition lam_bar = shape_of(restrict_labels(x.S, k));
  const Partition mu_bar = shape_of(restrict_labels(x.T, k));
  if (lam_bar == mu_bar) throw InternalError("stripping stopped on a diagonal shape");
  const Partition gamma_new = kostka_partner(lam_bar, mu_bar, gamma);
  out.trace.push_back({"local_pair", "gamma=" + gamma.str(), "gamma=" + gamma_new.str()});

  const auto base = kostka_survivor(gamma_new).S;
  const int k_new = gamma_new.length() + 1;
  const Filling s_bar = extend_filling(base, lam_bar, k_new);
  const Filling t_bar = extend_filling(base, mu_bar, k_new);
  out.image = {x.lambda, x.mu, restore_outer(s_bar, x.S, k, k_new), restore_outer(t_bar, x.T, k, k_new)};
  out.trace.push_back({"restore", state(s_bar, t_bar), state(out.image.S, out.image.T)});
  return out;
}

int RhtTriple::sign() const {
  const auto beta = sigma.cyc_comp();
  const auto s = rht_sign(S, lambda, beta);
  const auto t = rht_sign(T, mu, beta);
  if (!s || !t) throw std::invalid_argument("S and T must be RHTs with content cycC(sigma)");
  return *s * *t;
}

bool is_choice_sequence(const ChoiceSequence& c) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i)
    if (c[static_cast<std::size_t>(i)] < 1 || c[static_cast<std::size_t>(i)] > n - i) return false;
  return true;
}

RhtSurvivor f_lambda(const Partition& lambda, const ChoiceSequence& c, std::optional<std::vector<int>> ground) {
  return build_survivor(lambda, c, default_ground(lambda.size(), ground), 0);
}

ChoiceSequence f_lambda_inv(const Partition& lambda, const Filling& S, const Permutation& sigma) {
  return read_survivor(lambda, S, sigma);
}

RhtSurvivor f_mu_rho(const Partition& mu, const Partition& rho_inner, const ChoiceSequence& c,
                     std::optional<std::vector<int>> ground) {
  const int first = border_number(mu, rho_inner);
  return build_survivor(mu, c, default_ground(mu.size(), ground), first);
}

ChoiceSequence f_mu_rho_inv(const Partition& mu, const Partition& rho_inner, const Filling& T,
                            const Permutation& sigma) {
  const int first = border_number(mu, rho_inner);
  auto c = read_survivor(mu, T, sigma);
  if (c.empty() || c.front() != first) throw std::invalid_argument("last rim-hook of T is not rho");
  c.erase(c.begin());
  return c;
}

RhtOutcome rht_involution(const RhtTriple& x) {
  x.sign();
  RhtOutcome out;
  if (x.lambda == x.mu && x.S == x.T) {
    out.fixed_point = true;
    out.image = x;
    return out;
  }
  const auto cycles = x.sigma.canonical_cycles();
  const int ell = static_cast<int>(cycles.size());
  int k = ell;
  Filling s_prev, t_prev;
  for (; k >= 1; --k) {
    s_prev = restrict_labels(x.S, k - 1);
    t_prev = restrict_labels(x.T, k - 1);
    const std::vector<std::vector<int>> kept(cycles.begin(), cycles.begin() + (k - 1));
    out.trace.push_back({"strip", state(restrict_labels(x.S, k), restrict_labels(x.T, k)),
                         state(s_prev, t_prev, Permutation::from_cycles(kept))});
    if (s_prev == t_prev) break;
  }
  if (k < 1) throw InternalError("no survivor reached while stripping");
  const Partition gamma = shape_of(s_prev);
  const Filling s_bar = restrict_labels(x.S, k);
  const Filling t_bar = restrict_labels(x.T, k);
  const Partition lam_bar = shape_of(s_bar), mu_bar = shape_of(t_bar);
  if (lam_bar == mu_bar) throw InternalError("stripping stopped with eta = rho");
  const Partition gamma_new = rimhook_partner(lam_bar, mu_bar, gamma);
  out.trace.push_back({"local_pair", "gamma=" + gamma.str(), "gamma=" + gamma_new.str()});

  const std::vector<std::vector<int>> head(cycles.begin(), cycles.begin() + k);
  const Permutation sigma_bar = Permutation::from_cycles(head);
  const auto c = f_mu_rho_inv(mu_bar, gamma, t_bar, sigma_bar);
  const auto moved = f_mu_rho(mu_bar, gamma_new, c, sigma_bar.ground());
  out.trace.push_back({"f_transport", state(s_bar, t_bar, sigma_bar) + " c=" + seq_str(c),
                       "T=" + moved.S.str() + " sigma=" + moved.sigma.str()});

  const int k_new = moved.S.max_label();
  const Filling s_new = extend_filling(restrict_labels(moved.S, k_new - 1), lam_bar, k_new);
  auto all_cycles = moved.sigma.canonical_cycles();
  all_cycles.insert(all_cycles.end(), cycles.begin() + k, cycles.end());
  out.image = {x.lambda, x.mu, restore_outer(s_new, x.S, k, k_new), restore_outer(moved.S, x.T, k, k_new),
               Permutation::from_cycles(x.sigma.ground(), all_cycles)};
  out.trace.push_back({"restore", state(s_new, moved.S, moved.sigma),
                       state(out.image.S, out.image.T, out.image.sigma)});
  return out;
}

std::vector<KostkaObject> enumerate_kostka_pairs(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("shapes of different sizes");
  std::vector<KostkaObject> out;
  for (const auto& beta : compositions(lambda.size())) {
    const auto t = srht_find(mu, beta);
    if (!t) continue;
    for (const auto& s : enumerate_ssyt(lambda, beta)) out.push_back({lambda, mu, s, t->filling});
  }
  return out;
}

std::vector<RhtTriple> enumerate_rht_triples(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("shapes of different sizes");
  std::vector<RhtTriple> out;
  const auto ground = iota_ground(lambda.size());
  for (const auto& beta : compositions(lambda.size())) {
    const auto ss = enumerate_rht(lambda, beta);
    if (ss.empty()) continue;
    const auto ts = enumerate_rht(mu, beta);
    if (ts.empty()) continue;
    const auto perms = permutations_with_cyc_comp(ground, beta);
    for (const auto& s : ss)
      for (const auto& t : ts)
        for (const auto& p : perms) out.push_back({lambda, mu, s.filling, t.filling, p});
  }
  return out;
}

namespace {

template <typename Object, typename Involution>
void run_pairing(PairingReport& report, const std::vector<Object>& objects, Involution inv) {
  for (const auto& x : objects) {
    ++report.objects;
    try {
      const auto r = inv(x);
      if (r.fixed_point) {
        ++report.fixed_points;
        report.signed_fixed += x.sign();
        continue;
      }
      ++report.paired;
      if (r.image.lambda != x.lambda || r.image.mu != x.mu) report.failures.push_back("shape changed");
      if (r.image.sign() != -x.sign()) report.failures.push_back("sign not reversed");
      const auto back = inv(r.image);
      if (back.fixed_point || !(back.image == x)) report.failures.push_back("not an involution");
    } catch (const std::exception& e) {
      report.failures.push_back(e.what());
    }
  }
}

}  // namespace

PairingReport verify_pairing(const std::string& app, const Partition& lambda, const Partition& mu) {
  PairingReport report;
  report.app = app;
  report.lambda = lambda;
  report.mu = mu;
  if (app == "kostka") {
    report.expected_fixed = lambda == mu ? 1 : 0;
    run_pairing(report, enumerate_kostka_pairs(lambda, mu), kostka_involution);
  } else if (app == "rimhook") {
    report.expected_fixed = lambda == mu ? factorial(lambda.size()).get_si() : 0;
    run_pairing(report, enumerate_rht_triples(lambda, mu), rht_involution);
  } else {
    throw std::invalid_argument("pairing is defined for kostka and rimhook only");
  }
  return report;
}

}  // namespace locinv
