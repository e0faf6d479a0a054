#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "fratio/gamma.hpp"
#include "fratio/landau.hpp"
#include "fratio/params.hpp"

namespace fratio {

/// A Landau breakpoint where the step function is negative.
struct NegativeBreakpoint {
  Rational breakpoint;
  int64_t value = 0;

  friend bool operator==(const NegativeBreakpoint&,
                         const NegativeBreakpoint&) = default;
};

/// Two cyclically adjacent angles on the same side of the circle.
struct NonAlternating {
  Rational angle1;
  Rational angle2;
  bool alpha_side = false;

  friend bool operator==(const NonAlternating&,
                         const NonAlternating&) = default;
};

/// An angle occurring more than once among alpha and beta combined.
struct RepeatedAngle {
  Rational angle;

  friend bool operator==(const RepeatedAngle&, const RepeatedAngle&) = default;
};

using Witness = std::variant<NegativeBreakpoint, NonAlternating, RepeatedAngle>;

/// Joint verdict of the two independent routes. algebraic is defined as
/// integral && d == 1; the interlacing route must agree or the decision
/// fails loudly with TheoremViolationError instead of returning.
struct AlgebraicityReport {
  bool regular = false;
  int64_t d = 0;
  bool integral = false;
  bool interlacing = false;
  bool algebraic = false;
  int64_t r = 0;
  std::optional<Witness> witness;  // present iff !algebraic
  HypergeometricParams params;
};

/// Decides algebraicity of the generating series of gamma. Requires a
/// nonzero regular gamma vector. Witness priority when several failures
/// coexist: RepeatedAngle, then NonAlternating, then NegativeBreakpoint.
AlgebraicityReport decide_algebraic(const GammaVector& g);

}  // namespace fratio
