#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locinv/filling.hpp"
#include "locinv/permutation.hpp"
#include "locinv/rimhook.hpp"
#include "locinv/shapes.hpp"

namespace locinv {

struct TraceStep {
  std::string action;  // strip, local_pair, f_transport, restore
  std::string before;
  std::string after;
};

/// (S, T) with S an SSYT of shape lambda and T an SRHT of shape mu, same content.
struct KostkaObject {
  Partition lambda;
  Partition mu;
  Filling S;
  Filling T;

  Composition content() const;
  /// sgn(T). Throws std::invalid_argument if the pair is invalid.
  int sign() const;
  friend bool operator==(const KostkaObject&, const KostkaObject&) = default;
};

/// (S_lambda, S_lambda): row i filled with i.
KostkaObject kostka_survivor(const Partition& lambda);

struct KostkaOutcome {
  bool fixed_point = false;
  KostkaObject image;
  std::vector<TraceStep> trace;
};

/// The canonical sign-reversing involution on pairs (S, T).
/// Throws std::invalid_argument on an invalid pair.
KostkaOutcome kostka_involution(const KostkaObject& x);

/// (S, T, sigma) with S, T rim-hook tableaux of shapes lambda, mu and
/// content cycC(sigma).
struct RhtTriple {
  Partition lambda;
  Partition mu;
  Filling S;
  Filling T;
  Permutation sigma;

  /// sgn(S) sgn(T). Throws std::invalid_argument if the triple is invalid.
  int sign() const;
  friend bool operator==(const RhtTriple&, const RhtTriple&) = default;
};

/// (c_n, ..., c_1) with 1 <= c_k <= k, stored in that order.
using ChoiceSequence = std::vector<int>;

bool is_choice_sequence(const ChoiceSequence& c);

struct RhtSurvivor {
  Filling S;
  Permutation sigma;
  friend bool operator==(const RhtSurvivor&, const RhtSurvivor&) = default;
};

/// F_lambda: choice sequences of length |lambda| to pairs (S, sigma), sigma
/// on the given ground set (default 1..n). Throws std::invalid_argument on a
/// bounds violation or a ground set of the wrong size.
RhtSurvivor f_lambda(const Partition& lambda, const ChoiceSequence& c,
                     std::optional<std::vector<int>> ground = std::nullopt);
/// Inverse of f_lambda. Throws std::invalid_argument unless S is an RHT of
/// shape lambda with content cycC(sigma).
ChoiceSequence f_lambda_inv(const Partition& lambda, const Filling& S, const Permutation& sigma);

/// F_{mu,rho}: the last rim-hook is fixed to mu/rho_inner; c has length |mu| - 1.
/// Throws std::invalid_argument unless mu/rho_inner is a removable rim-hook.
RhtSurvivor f_mu_rho(const Partition& mu, const Partition& rho_inner, const ChoiceSequence& c,
                     std::optional<std::vector<int>> ground = std::nullopt);
ChoiceSequence f_mu_rho_inv(const Partition& mu, const Partition& rho_inner, const Filling& T,
                            const Permutation& sigma);

struct RhtOutcome {
  bool fixed_point = false;
  RhtTriple image;
  std::vector<TraceStep> trace;
};

/// The sign-reversing involution on triples; fixed points are the (S, S, sigma).
/// Throws std::invalid_argument on an invalid triple.
RhtOutcome rht_involution(const RhtTriple& x);

/// Every element of P_{lambda,mu} in enumeration order.
std::vector<KostkaObject> enumerate_kostka_pairs(const Partition& lambda, const Partition& mu);
std::vector<RhtTriple> enumerate_rht_triples(const Partition& lambda, const Partition& mu);

struct PairingReport {
  std::string app;
  Partition lambda;
  Partition mu;
  long objects = 0;
  long fixed_points = 0;
  long paired = 0;
  long signed_fixed = 0;  // signed count of fixed points
  long expected_fixed = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty() && signed_fixed == expected_fixed; }
};

/// Runs the involution over all of P_{lambda,mu} and checks that it is an
/// involution, reverses signs off fixed points and leaves the expected signed
/// count (1 or n! on the diagonal, 0 elsewhere). app is "kostka" or "rimhook".
PairingReport verify_pairing(const std::string& app, const Partition& lambda, const Partition& mu);

}  // namespace locinv
