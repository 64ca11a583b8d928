#include "locinv/scalars.hpp"

#include <stdexcept>

namespace locinv {

BigInt big_z(const Composition& beta) {
  BigInt z = 1;
  long partial = 0;
  for (int p : beta) {
    partial += p;
    z *= partial;
  }
  return z;
}

BigInt little_z(const Partition& lambda) {
  BigInt z = 1;
  for (const auto& [k, m] : multiplicities(lambda)) {
    z *= factorial(m);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    z *= power;
  }
  return z;
}

BigInt multinomial(const std::vector<int>& counts) {
  int total = 0;
  for (int c : counts) {
    if (c < 0) throw std::invalid_argument("negative multinomial count");
    total += c;
  }
  BigInt result = factorial(total);
  for (int c : counts) result /= factorial(c);
  return result;
}

BigInt big_w(const Partition& mu) {
  if (mu.empty()) throw std::invalid_argument("W of the empty partition is undefined");
  std::vector<int> counts;
  for (const auto& [part, m] : multiplicities(mu)) counts.push_back(m);
  BigInt w = multinomial(counts) * mu.size();
  // exact: l(mu) * W_mu counts marked row tilings
  w /= mu.length();
  return w;
}

}  // namespace locinv
