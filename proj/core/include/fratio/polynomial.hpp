#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fratio/rational.hpp"

namespace fratio {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, constant term first. The zero polynomial has an empty
/// coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<int64_t> coeffs);

  static IntPolynomial constant(Integer c);
  static IntPolynomial monomial(int degree, Integer lead = Integer(1));
  /// prod (t - r) over the given roots.
  static IntPolynomial from_integer_roots(const std::vector<int64_t>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;

  Integer coeff(int i) const;  // 0 beyond the degree
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& leading() const;  // requires a nonzero polynomial

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial operator*(const Integer& scalar) const;
  IntPolynomial pow(uint64_t e) const;

  /// Exact quotient num / den in Z[t]; throws Error when the division
  /// leaves a remainder or den is zero.
  static IntPolynomial divide_exact(const IntPolynomial& num,
                                    const IntPolynomial& den);

  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// gcd(p, q) over Q is constant. Both zero counts as not coprime.
bool coprime_over_rationals(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace fratio
