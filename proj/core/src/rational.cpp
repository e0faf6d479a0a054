#include "fratio/rational.hpp"

#include "fratio/errors.hpp"

namespace fratio {

Integer factorial(uint64_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer int_pow(const Integer& base, uint64_t exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational make_rational(Integer numerator, Integer denominator) {
  if (denominator == 0) throw Error("rational with zero denominator");
  Rational q(std::move(numerator), std::move(denominator));
  q.canonicalize();
  return q;
}

Integer floor_rational(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational fractional_part(const Rational& x) {
  Rational f = x - Rational(floor_rational(x));
  f.canonicalize();
  return f;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

bool fits_int64(const Integer& v) {
  static const Integer lo(INT64_MIN);
  static const Integer hi(INT64_MAX);
  return v >= lo && v <= hi;
}

int64_t to_int64(const Integer& v) {
  if (!fits_int64(v)) throw Error("integer out of int64 range: " + v.get_str());
  // get_si is safe for anything in long range; int64_t == long here.
  return static_cast<int64_t>(v.get_si());
}

bool is_prime(uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (uint64_t f = 3; f * f <= p; f += 2) {
    if (p % f == 0) return false;
  }
  return true;
}

}  // namespace fratio
