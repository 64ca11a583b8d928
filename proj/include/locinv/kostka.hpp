#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "locinv/filling.hpp"
#include "locinv/framework.hpp"
#include "locinv/shapes.hpp"

namespace locinv {

/// Thrown when a case that the local-identity proof rules out is reached.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Trims trailing zero parts and builds the partition.
Partition trimmed_partition(std::vector<int> parts);

/// All gamma with dg(gamma) inside dg(lambda) and lambda/gamma a horizontal strip of size L.
std::vector<Partition> horizontal_strip_removals(const Partition& lambda, int L);

/// lambda/gamma is a (possibly empty) horizontal strip.
bool is_horizontal_strip(const Partition& lambda, const Partition& gamma);

/// Number of rows r with gamma_r < lambda_r.
int rows_occupied(const Partition& lambda, const Partition& gamma);

/// The special rim-hook of mu ending at the rightmost cell of row i (1-based).
struct SpecialRimHook {
  int row = 0;
  int size = 0;
  int sign = 1;
  Partition remainder;
};

/// sigma_1, ..., sigma_s for s = l(mu), in row order.
std::vector<SpecialRimHook> special_rimhooks(const Partition& mu);

/// The at-most-one special rim-hook of size L.
std::optional<SpecialRimHook> special_rimhook_of_size(const Partition& mu, int L);

bool is_ssyt(const Filling& f, const Partition& lambda, const Composition& beta);

/// ssyt(lambda, beta) sorted by row-major labels. Throws on size mismatch.
std::vector<Filling> enumerate_ssyt(const Partition& lambda, const Composition& beta);

struct SignedFilling {
  Filling filling;
  int sign = 1;
};

/// The unique SRHT of shape mu and content beta, if any. Throws on size mismatch.
std::optional<SignedFilling> srht_find(const Partition& mu, const Composition& beta);

/// Checks that f is an SRHT of shape mu and content beta; returns its sign.
std::optional<int> srht_sign(const Filling& f, const Partition& mu, const Composition& beta);

LocalSystem kostka_system();

struct KostkaPairing {
  enum class Kind { Empty, Diagonal, Matched };
  Kind kind = Kind::Empty;
  Partition first;
  Partition second;
  int first_sign = 0;
  int second_sign = 0;
};

/// The set G(lambda, mu) of the local identity, organized as a pairing.
/// Throws std::invalid_argument on size mismatch or n = 0.
KostkaPairing kostka_pair(const Partition& lambda, const Partition& mu);

/// For lambda != mu and gamma in G(lambda, mu), the other element of G.
Partition kostka_partner(const Partition& lambda, const Partition& mu, const Partition& gamma);

}  // namespace locinv
