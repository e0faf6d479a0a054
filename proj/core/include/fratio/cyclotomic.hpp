#pragma once

#include <cstdint>
#include <vector>

#include "fratio/polynomial.hpp"

namespace fratio {

std::vector<int64_t> divisors(int64_t n);  // sorted ascending, n >= 1

int64_t euler_phi(int64_t n);  // n >= 1

/// The d-th cyclotomic polynomial, degree phi(d), computed by exact
/// division of t^d - 1 by the cyclotomic polynomials of the proper
/// divisors of d.
IntPolynomial cyclotomic_polynomial(int64_t d);

}  // namespace fratio
