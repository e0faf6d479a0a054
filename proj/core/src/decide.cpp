#include "fratio/decide.hpp"

#include "fratio/errors.hpp"

namespace fratio {

AlgebraicityReport decide_algebraic(const GammaVector& g) {
  if (g.is_zero()) throw ZeroGammaError();
  if (!is_regular(g)) throw NotRegularError();

  AlgebraicityReport report;
  report.regular = true;
  report.d = dimension(g);

  // Route one: the Landau step function.
  LandauProfile profile = landau_profile(g);
  report.integral = profile.min_value >= 0;

  // Route two: unit-circle root interlacing of the cyclotomic data.
  report.params = gamma_to_params(g);
  report.r = report.params.r;
  CircleInterlacing circle = analyze_circle_interlacing(report.params);
  report.interlacing = circle.ok();

  report.algebraic = report.integral && report.d == 1;
  if (report.algebraic != report.interlacing) {
    throw TheoremViolationError(
        "Landau route and interlacing route disagree");
  }

  if (!report.algebraic) {
    if (!circle.multiplicity_free) {
      report.witness = RepeatedAngle{circle.repeated_angle};
    } else if (!circle.alternating) {
      report.witness = NonAlternating{circle.clash_first, circle.clash_second,
                                      circle.clash_on_alpha};
    } else {
      // Alternating but not algebraic forces a negative Landau block.
      const Rational* breakpoint = nullptr;
      int64_t value = 0;
      for (size_t i = 0; i < profile.breakpoints.size(); ++i) {
        if (profile.values[i] < 0) {
          breakpoint = &profile.breakpoints[i];
          value = profile.values[i];
          break;
        }
      }
      if (breakpoint == nullptr) {
        throw TheoremViolationError(
            "non-algebraic gamma with no extractable witness");
      }
      report.witness = NegativeBreakpoint{*breakpoint, value};
    }
  }
  return report;
}

}  // namespace fratio
