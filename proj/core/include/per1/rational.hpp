#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace per1 {

// Arbitrary-precision integers and rationals.  mpq_class keeps the canonical
// invariants (gcd(|num|, den) = 1, den >= 1) on every operation.
using BigInt = mpz_class;
using BigRat = mpq_class;

/// Parse "p", "-p/q", or a finite decimal like "-1.25" into an exact rational.
std::optional<BigRat> parse_rational(const std::string& s);

BigRat pow_rat(const BigRat& x, long e);  // e may be negative for nonzero x

/// log|x| for nonzero x, computed from the bignum mantissa/exponent split.
double log_abs(const BigRat& x);
double log_abs(const BigInt& x);

/// x as a double scaled by 2^-e2 so the conversion cannot overflow:
/// x = mantissa * 2^e2 with mantissa in [0.5, 1) up to sign.
void to_scaled_double(const BigRat& x, double& mantissa, long& e2);

/// Logarithmic Weil height h(p/q) = log max(|p|, q) for p/q in lowest terms.
double weil_height(const BigRat& x);

long ord_at(const BigRat& x, unsigned long p);  // p-adic valuation, x != 0

std::vector<unsigned long> prime_factors(BigInt n);  // distinct primes of |n|

}  // namespace per1
