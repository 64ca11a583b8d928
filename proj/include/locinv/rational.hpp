#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace locinv {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact rational number. GMP keeps every arithmetic result in lowest
/// terms with a positive denominator, so zero is always stored as 0/1.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument when den is 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Inverse of to_string; also accepts a bare integer.
Rational parse_rational(std::string_view text);

BigInt factorial(int n);

}  // namespace locinv
