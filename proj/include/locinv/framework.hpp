#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "locinv/matrix.hpp"
#include "locinv/rational.hpp"
#include "locinv/shapes.hpp"

namespace locinv {

/// Abstract recursion data. Shapes are passed as compositions; systems whose
/// index set is P(n) simply only ever see weakly decreasing ones.
struct LocalSystem {
  std::string name;
  std::function<std::vector<Composition>(int)> shapes;
  std::function<std::vector<Composition>(const Composition&, int)> succ_a;
  std::function<std::vector<Composition>(const Composition&, int)> succ_b;
  std::function<Rational(const Composition&, const Composition&)> weight_a;
  std::function<Rational(const Composition&, const Composition&)> weight_b;
};

/// Builds A_m and B_m bottom-up and keeps every level it has computed.
class MatrixFamily {
 public:
  explicit MatrixFamily(LocalSystem sys) : sys_(std::move(sys)) {}

  const LocalSystem& system() const noexcept { return sys_; }
  const IndexedMatrix& A(int n);
  const IndexedMatrix& B(int n);

 private:
  LocalSystem sys_;
  std::map<int, IndexedMatrix> a_;
  std::map<int, IndexedMatrix> b_;
};

/// R(n) x C(n), A(lambda,beta) = sum_{gamma in S(lambda,L(beta))} wtA * A(gamma,beta*).
IndexedMatrix build_A(const LocalSystem& sys, int n);
/// C(n) x R(n), B(beta,mu) = sum_{delta in T(mu,L(beta))} wtB * B(beta*,delta).
IndexedMatrix build_B(const LocalSystem& sys, int n);

struct LocalTerm {
  Composition gamma;
  int L = 0;
  Rational weight_a;
  Rational weight_b;
  Rational product() const { return weight_a * weight_b; }
};

/// The set G(lambda,mu) with one term per (L, gamma in S(lambda,L) and T(mu,L)).
std::vector<LocalTerm> local_terms(const LocalSystem& sys, const Composition& lambda,
                                   const Composition& mu);

/// Left side of the local identity. Throws std::invalid_argument on size mismatch
/// or when |lambda| = 0.
Rational local_lhs(const LocalSystem& sys, const Composition& lambda, const Composition& mu);

struct LocalViolation {
  Composition lambda;
  Composition mu;
  Rational value;
};

struct LocalReport {
  int n = 0;
  std::size_t pairs_checked = 0;
  std::vector<LocalViolation> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// Checks local_lhs(lambda,mu) == chi(lambda == mu) over R(n) x R(n).
LocalReport verify_local(const LocalSystem& sys, int n);

/// A_n * B_n == I_{R(n)} exactly.
bool verify_inversion(const LocalSystem& sys, int n);
bool verify_inversion(MatrixFamily& family, int n);

/// A(lambda,alpha) == A(lambda,beta) whenever alpha and beta sort to the same partition.
bool check_sorting_condition(const IndexedMatrix& a);

/// Restriction of A to partition-indexed columns, in P(n) order.
/// Throws std::invalid_argument if the sorting condition fails.
IndexedMatrix square_restrict_A(const IndexedMatrix& a);

/// B'(nu,mu) = sum over beta with sort(beta) = nu of B(beta,mu); rows in P(n) order.
IndexedMatrix square_fold_B(const IndexedMatrix& b);

}  // namespace locinv
