#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fratio/gamma.hpp"
#include "fratio/polynomial.hpp"
#include "fratio/rational.hpp"

namespace fratio {

/// Multiplicities m_d = sum_{d | nu} gamma_nu of the cyclotomic factors of
/// prod (t^nu - 1)^gamma_nu. Only nonzero entries are stored.
struct CyclotomicMultiset {
  std::map<int64_t, int64_t> mult;
};

CyclotomicMultiset cyclotomic_multiplicities(const GammaVector& g);

/// Hypergeometric data of a regular nonzero gamma vector: the angle
/// multisets alpha (positive cyclotomic multiplicities) and beta (negative
/// ones), both sorted in [0, 1), the degree r, and the series rescaling
/// constant prod nu^(nu * gamma_nu).
///
/// Construction guarantees: |alpha| = |beta| = r >= 1; each reduced
/// fraction k/d with gcd(k, d) = 1 appears |m_d| times on the side picked
/// by the sign of m_d; alpha and beta are disjoint.
struct HypergeometricParams {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  int64_t r = 0;
  Rational scale;  // reported as M
};

HypergeometricParams gamma_to_params(const GammaVector& g);

/// (p, q) with p = prod Phi_d^{m_d} over m_d > 0 and q over m_d < 0.
/// Both are monic degree-r products of cyclotomic polynomials, coprime in
/// Z[t].
std::pair<IntPolynomial, IntPolynomial> params_to_polynomials(
    const HypergeometricParams& pr);

/// Outcome of the unit-circle interlacing analysis, kept structured so the
/// decision layer can extract witnesses.
struct CircleInterlacing {
  bool multiplicity_free = false;  // no angle repeats in alpha+beta combined
  bool alternating = false;        // labels alternate cyclically
  bool zero_in_beta = false;       // the walk anchor: angle 0 carries beta

  // First offending angle when multiplicity_free is false.
  Rational repeated_angle;
  // First cyclically adjacent same-side pair when alternating is false.
  Rational clash_first, clash_second;
  bool clash_on_alpha = false;

  bool ok() const { return multiplicity_free && alternating && zero_in_beta; }
};

CircleInterlacing analyze_circle_interlacing(const HypergeometricParams& pr);

/// True iff every angle has multiplicity one, the two multisets are
/// disjoint, and walking the merged angles counterclockwise from 0 the
/// sides alternate strictly, with the angle 0 present on the beta side.
/// The anchor makes the test equivalent to "gamma integral and d = 1";
/// dropping it would accept mirrored vectors whose series is not algebraic.
bool interlace_on_circle(const HypergeometricParams& pr);

/// u_{n+1} / u_n = M * prod_j (n + a_j) / prod_j (n + b_j) where a, b are
/// the alpha/beta angles with 0 replaced by 1 (representatives in (0, 1]).
Rational term_ratio(const HypergeometricParams& pr, uint64_t n);

}  // namespace fratio
