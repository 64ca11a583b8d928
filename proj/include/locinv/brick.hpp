#pragma once

#include <vector>

#include "locinv/filling.hpp"
#include "locinv/framework.hpp"
#include "locinv/rational.hpp"
#include "locinv/refine.hpp"
#include "locinv/shapes.hpp"

namespace locinv {

/// Ordered brick tabloid: row_labels[r] lists the brick labels of row r+1
/// from left to right; brick k has length content_k.
struct OBT {
  Partition shape;
  Composition content;
  std::vector<std::vector<int>> row_labels;

  Filling filling() const;
  /// Bricks ordered by label; sign is +1 on the first brick of a row.
  std::vector<Brick> bricks() const;
  friend bool operator==(const OBT&, const OBT&) = default;
};

/// All OBTs of shape lambda and content beta, sorted by row-major labels.
/// Throws std::invalid_argument on size mismatch.
std::vector<OBT> enumerate_obt(const Partition& lambda, const Composition& beta);

/// Counts |obt(lambda, beta)| over P(n) x C(n) by enumeration.
IndexedMatrix obt_count_matrix(int n);

LocalSystem obt_system();

/// F(T) = (k, T*): T* drops the largest brick, k is the rank of its row among
/// rows of the same length.
struct ObtSplit {
  int k = 0;
  OBT rest;
};
/// Throws std::invalid_argument on an empty tabloid.
ObtSplit obt_split(const OBT& t);
/// Inverse of obt_split: appends a brick of length last_len to rest.
/// Throws std::invalid_argument if lambda is not reachable or k is out of range.
OBT obt_join(const Partition& lambda, int last_len, int k, const OBT& rest);

struct BrickTabloid {
  Composition shape;
  Partition type;
  CBT underlying;
  BigInt weight;
};

/// bt(beta, mu), ordered by content in canonical composition order.
/// Throws std::invalid_argument on size mismatch.
std::vector<BrickTabloid> enumerate_bt(const Composition& beta, const Partition& mu);

/// w_{beta,mu}: total weight of bt(beta, mu).
BigInt w_of(const Composition& beta, const Partition& mu);

/// (-1)^(l(mu) - l(beta)) w_{beta,mu} / Z_beta over C(n) x P(n).
IndexedMatrix brick_B_closed(int n);

/// A row of length |bricks| tiled by bricks in order, one marked cell
/// (1-based) and optionally one marked brick (1-based, 0 for none).
struct MarkedTiling {
  Composition bricks;
  int marked_cell = 1;
  int marked_brick = 0;
  friend bool operator==(const MarkedTiling&, const MarkedTiling&) = default;
};

/// g: swaps the brick holding the marked cell with the last brick and marks
/// the brick that moved out of last place. Throws std::invalid_argument on a
/// malformed marking.
MarkedTiling marked_brick_bijection(const MarkedTiling& t);
/// g^{-1}: swaps the marked brick back with the last brick.
MarkedTiling marked_brick_inverse(const MarkedTiling& s);

struct BrickLocalTerm {
  Partition gamma;
  int multiplicity = 0;  // m_{lambda \ gamma}(lambda)
  int sign = 1;          // (-1)^(l(mu) - l(gamma) - 1)
  BigInt w;              // W_{mu \ gamma}
  Rational value;        // multiplicity * sign * w / n
};

struct BrickLocalReport {
  std::vector<BrickLocalTerm> terms;
  Rational total;
};

/// G(lambda, mu) of the brick local identity, built from the multiset structure
/// of lambda and mu. Throws std::invalid_argument on size mismatch or n = 0.
BrickLocalReport brick_local_g(const Partition& lambda, const Partition& mu);

}  // namespace locinv
