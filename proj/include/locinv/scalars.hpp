#pragma once

#include "locinv/rational.hpp"
#include "locinv/shapes.hpp"

namespace locinv {

/// Z_beta: product of the partial sums beta_1, beta_1+beta_2, ...
/// Z of the empty composition is 1, and Z_beta = |beta| * Z_{beta*}.
BigInt big_z(const Composition& beta);

/// z_lambda = prod_k m_k! k^{m_k}; n!/z_lambda permutations have cycle type lambda.
BigInt little_z(const Partition& lambda);

/// Multinomial coefficient (sum counts)! / prod counts!.
BigInt multinomial(const std::vector<int>& counts);

/// W_mu = (|mu| / l(mu)) * multinomial(l(mu); m_1(mu), m_2(mu), ...),
/// the sum of last parts over all rearrangements of mu.
/// Throws std::invalid_argument for the empty partition.
BigInt big_w(const Partition& mu);

}  // namespace locinv
