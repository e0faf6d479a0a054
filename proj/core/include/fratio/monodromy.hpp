#pragma once

#include <cstdint>
#include <optional>

#include "fratio/matrix.hpp"
#include "fratio/params.hpp"
#include "fratio/polynomial.hpp"

namespace fratio {

/// Monodromy generators around 0 (B), infinity (A) and 1 (sigma) realized
/// as companion matrices of q and p on a shared cyclic basis, with
/// sigma = B^-1 A so that A = B sigma holds exactly. sigma - I has rank at
/// most 1 (a pseudo-reflection).
struct CompanionPair {
  RationalMatrix A;
  RationalMatrix B;
  RationalMatrix sigma;
  int64_t r = 0;
};

/// Multiplication-by-t matrix on the cyclic basis 1, t, ..., t^{r-1}
/// modulo a monic polynomial.
RationalMatrix companion_matrix(const IntPolynomial& monic);

/// Builds the pair from the characteristic polynomials of the params and
/// verifies the construction: char(A) = p, char(B) = q, A = B sigma,
/// rank(sigma - I) <= 1. Throws NotCoprimeError when gcd(p, q) != 1.
CompanionPair build_monodromy(const HypergeometricParams& pr);

struct EigenvalueOneStructure {
  int64_t algebraic_multiplicity = 0;
  int64_t largest_jordan_block = 0;

  friend bool operator==(const EigenvalueOneStructure&,
                         const EigenvalueOneStructure&) = default;
};

/// Multiplicity of the root 1 of the characteristic polynomial, and the
/// size of the largest Jordan block at eigenvalue 1: the smallest k with
/// rank((M - I)^k) = rank((M - I)^{k+1}). All ranks exact.
EigenvalueOneStructure eigenvalue_one_structure(const RationalMatrix& m);

/// Smallest k <= cap with M^k = I, or nullopt when no such k exists below
/// the cap. Throws SingularMatrixError for singular M.
std::optional<int64_t> element_order(const RationalMatrix& m, int64_t cap);

}  // namespace fratio
