#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fratio {

// Factorial products overflow machine words almost immediately, so every
// numeric value in the library is an exact GMP integer or rational.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(uint64_t n);
Integer int_pow(const Integer& base, uint64_t exponent);

/// Reduced rational with positive denominator from a num/den pair.
Rational make_rational(Integer numerator, Integer denominator);

Integer floor_rational(const Rational& x);

/// x - floor(x), always in [0, 1).
Rational fractional_part(const Rational& x);

bool is_integer(const Rational& x);

bool fits_int64(const Integer& v);
int64_t to_int64(const Integer& v);  // throws Error when out of range

/// Deterministic trial-division primality check for valuation arguments.
bool is_prime(uint64_t p);

}  // namespace fratio
