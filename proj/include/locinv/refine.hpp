#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "locinv/filling.hpp"
#include "locinv/framework.hpp"
#include "locinv/rational.hpp"
#include "locinv/shapes.hpp"

namespace locinv {

/// alpha <= beta in the refinement order: the parts of beta are sums of
/// consecutive blocks of parts of alpha.
bool refines(const Composition& alpha, const Composition& beta);

/// A horizontal brick; sign is +1 for the first brick of its row, -1 otherwise.
struct Brick {
  int label = 0;
  int row = 0;
  int start_col = 0;
  int len = 0;
  int sign = 1;
  friend bool operator==(const Brick&, const Brick&) = default;
};

/// Compositional brick tabloid: bricks of lengths content_1, content_2, ...
/// laid left to right, top row first, over dg(shape).
struct CBT {
  Composition shape;
  Composition content;
  std::vector<Brick> bricks;

  int sign() const;
  Filling filling() const;
  /// content^(i): the lengths of the bricks in row i, in order.
  std::vector<Composition> row_contents() const;
};

/// The unique CBT of the given shape and content, when content refines shape.
/// Throws std::invalid_argument on size mismatch.
std::optional<CBT> cbt_find(const Composition& shape, const Composition& content);

/// chi(lambda <= beta) over C(n) x C(n).
IndexedMatrix incidence_A(int n);
/// (-1)^(l(beta) - l(mu)) chi(beta <= mu) over C(n) x C(n).
IndexedMatrix mobius_B(int n);

LocalSystem refine_system();

struct SignedShape {
  Composition shape;
  int sign = 1;
  friend bool operator==(const SignedShape&, const SignedShape&) = default;
};

/// G(lambda, mu): prefixes of lambda reachable from mu by lowering its last part.
/// Throws std::invalid_argument on size mismatch or n = 0.
std::vector<SignedShape> local_g_refine(const Composition& lambda, const Composition& mu);

/// (-1)^(n - l(lambda)) chi(lambda <= beta); its own inverse.
IndexedMatrix self_inverse_matrix(int n);

/// (Z_{shape,content}, L_{shape,content}) from the rows of the unique CBT.
/// Throws std::invalid_argument unless content refines shape.
std::pair<BigInt, BigInt> weighted_factors(const Composition& shape, const Composition& content);

/// Weights L(lambda) and sgn(mu,delta)/L(mu) on the refinement recursion.
LocalSystem weighted_system();

/// chi(lambda <= beta) L_{beta,lambda}.
IndexedMatrix weighted_A(int n);
/// (-1)^(l(beta) - l(mu)) chi(beta <= mu) / Z_{mu,beta}.
IndexedMatrix weighted_B(int n);

/// H(beta, lambda) = chi(lambda <= beta) / Z_{beta,lambda}: the coefficient of
/// Psi_lambda in h_beta. Equals D * weighted_B(n)^T * D with D = diag((-1)^l).
IndexedMatrix nsym_h_in_psi(int n);
/// P(mu, beta) = (-1)^(l(mu) - l(beta)) chi(beta <= mu) L_{mu,beta}: the
/// coefficient of h_beta in Psi_mu. Equals D * weighted_A(n)^T * D.
IndexedMatrix nsym_psi_in_h(int n);

}  // namespace locinv
