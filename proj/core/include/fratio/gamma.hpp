#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "fratio/rational.hpp"

namespace fratio {

struct GammaEntry {
  int64_t nu;        // factorial argument multiplier, >= 1
  int64_t exponent;  // nonzero in normal form

  friend auto operator<=>(const GammaEntry&, const GammaEntry&) = default;
};

/// Finitely supported integer vector nu -> gamma_nu defining the sequence
/// u_n = prod_nu (nu*n)!^gamma_nu.
///
/// Normal form: entries sorted by nu, no zero exponents, no duplicate nu.
/// Construction normalizes: duplicate nu are merged additively and zero
/// exponents dropped, so equality is structural on the normal form.
class GammaVector {
 public:
  GammaVector() = default;  // the zero vector
  explicit GammaVector(std::vector<GammaEntry> entries);
  GammaVector(std::initializer_list<GammaEntry> entries);

  const std::vector<GammaEntry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  int64_t max_nu() const;       // 0 for the zero vector
  int64_t support_gcd() const;  // 0 for the zero vector
  int64_t height() const;       // sum of nu * |gamma_nu|

  /// Entrywise exponent sum; term(a + b, n) = term(a, n) * term(b, n).
  GammaVector operator+(const GammaVector& other) const;

  /// Every support index multiplied by k >= 1.
  GammaVector scaled_support(int64_t k) const;

  friend auto operator<=>(const GammaVector&, const GammaVector&) = default;

 private:
  std::vector<GammaEntry> entries_;
};

/// sum(nu * gamma_nu) == 0.
bool is_regular(const GammaVector& g);

/// -sum(gamma_nu). May be any integer.
int64_t dimension(const GammaVector& g);

/// Exact value of prod (nu*n)!^gamma_nu as a reduced rational; 1 at n = 0.
Rational term(const GammaVector& g, uint64_t n);

/// v_p(m!) by Legendre's formula: sum_k floor(m / p^k).
int64_t factorial_valuation(uint64_t m, uint64_t p);

/// p-adic valuation of term(g, n) via Legendre sums, independently of the
/// Landau route. Throws NotPrimeError when p fails the primality check.
int64_t valuation_direct(const GammaVector& g, uint64_t n, uint64_t p);

}  // namespace fratio
