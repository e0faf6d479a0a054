#pragma once

#include <cstdint>
#include <vector>

#include "fratio/gamma.hpp"
#include "fratio/rational.hpp"

namespace fratio {

/// Step-function profile of L(x) = -sum gamma_nu * frac(nu x) over one
/// period [0, 1). L is right continuous, so values[i] is the constant value
/// of L on [breakpoints[i], breakpoints[i+1]).
struct LandauProfile {
  std::vector<Rational> breakpoints;  // strictly increasing, starts at 0
  std::vector<int64_t> values;        // value on the block starting there
  int64_t d = 0;                      // dimension of gamma
  int64_t min_value = 0;
  int64_t max_value = 0;
};

/// Exact integer L(x) for rational x. Requires a regular gamma vector
/// (otherwise the values are neither integral nor periodic).
int64_t landau_value(const GammaVector& g, const Rational& x);

/// Full profile over [0, 1). Breakpoint candidates are the reduced
/// fractions k/nu over the support, deduplicated, with 0 always present.
LandauProfile landau_profile(const GammaVector& g);

/// Landau's criterion: u_n is an integer for all n iff L >= 0 everywhere.
bool is_integral(const GammaVector& g);

/// v_p(u_n) = sum_{k>=1} L(n / p^k); the sum is truncated at the first k
/// with p^k > max_nu * n, beyond which every term vanishes.
int64_t valuation_landau(const GammaVector& g, uint64_t n, uint64_t p);

}  // namespace fratio
