#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locinv/filling.hpp"
#include "locinv/framework.hpp"
#include "locinv/kostka.hpp"
#include "locinv/shapes.hpp"

namespace locinv {

/// N-bead abacus. Position p (0-based) holds a bead iff p = lambda_r + N - r
/// for some 1 <= r <= N.
class Abacus {
 public:
  Abacus() = default;
  /// Throws std::invalid_argument when N < l(lambda).
  static Abacus from_partition(const Partition& lambda, int beads);
  /// Builds from a 0/1 string; trailing gaps are implied.
  static Abacus from_word(const std::string& word);

  int beads() const noexcept { return beads_; }
  bool bead(int pos) const noexcept {
    return pos >= 0 && pos < static_cast<int>(word_.size()) && word_[static_cast<std::size_t>(pos)];
  }
  /// Number of beads at positions strictly between a and b.
  int beads_between(int a, int b) const noexcept;

  Partition decode() const;

  /// Moves the bead at from to the gap at to. The sign is (-1)^(beads strictly
  /// between). Throws std::invalid_argument for an empty source, an occupied
  /// target or a negative position.
  std::pair<Abacus, int> move_bead(int from, int to) const;

  /// "1110101..." up to and including the last bead.
  std::string word() const;

  friend bool operator==(const Abacus& a, const Abacus& b) {
    return a.beads_ == b.beads_ && a.word() == b.word();
  }

 private:
  int beads_ = 0;
  std::vector<char> word_;
};

/// A removable rim-hook together with the partition left after removing it.
struct RimHook {
  std::vector<Cell> cells;
  Partition remainder;
  int sign = 1;
  int size() const noexcept { return static_cast<int>(cells.size()); }
};

/// Cells of dg(outer) outside dg(inner), in reading order.
std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner);

/// All rim-hooks of size L removable from lambda, found as bead jumps.
std::vector<RimHook> rimhook_removals(const Partition& lambda, int L);

/// The border rim-hook attached to the c-th cell of dg(nu) in reading order.
/// Throws std::invalid_argument unless 1 <= c <= |nu|.
RimHook border_rimhook_of_cell(const Partition& nu, int c);

/// Inverse of border_rimhook_of_cell: the reading number of the cell whose
/// border rim-hook is nu/gamma. Throws unless nu/gamma is a removable rim-hook.
int border_number(const Partition& nu, const Partition& gamma);

/// nu/gamma is a nonempty rim-hook with dg(gamma) inside dg(nu).
bool is_rimhook_removal(const Partition& nu, const Partition& gamma);

/// (-1)^(rows - 1) for the rim-hook nu/gamma.
int rimhook_sign(const Partition& nu, const Partition& gamma);

/// Every RHT of shape lambda and content beta, sorted by row-major labels.
std::vector<SignedFilling> enumerate_rht(const Partition& lambda, const Composition& beta);

/// Checks that f is an RHT of shape lambda and content beta; returns its sign.
std::optional<int> rht_sign(const Filling& f, const Partition& lambda, const Composition& beta);

LocalSystem rimhook_system();

struct RimhookWay {
  Partition gamma;
  int L = 0;
  int sign_lambda = 1;  // sgn(lambda/gamma)
  int sign_mu = 1;      // sgn(mu/gamma)
  int product() const noexcept { return sign_lambda * sign_mu; }
};

struct RimhookPairing {
  enum class Kind { Empty, Diagonal, Matched };
  Kind kind = Kind::Empty;
  /// Diagonal: all |lambda| ways in border-number order. Matched: two ways,
  /// the first through gamma = lambda intersect mu.
  std::vector<RimhookWay> ways;
};

/// G(lambda, mu) of the rim-hook local identity, via the two-way bead-jump analysis.
RimhookPairing rimhook_pair(const Partition& lambda, const Partition& mu);

/// For lambda != mu and gamma in G(lambda, mu), the other intermediate.
Partition rimhook_partner(const Partition& lambda, const Partition& mu, const Partition& gamma);

}  // namespace locinv
