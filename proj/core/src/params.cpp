#include "fratio/params.hpp"

#include <algorithm>
#include <numeric>

#include "fratio/cyclotomic.hpp"
#include "fratio/errors.hpp"

namespace fratio {

CyclotomicMultiset cyclotomic_multiplicities(const GammaVector& g) {
  CyclotomicMultiset m;
  for (const auto& e : g.entries()) {
    for (int64_t d : divisors(e.nu)) m.mult[d] += e.exponent;
  }
  std::erase_if(m.mult, [](const auto& kv) { return kv.second == 0; });
  return m;
}

namespace {

// Angles of the primitive d-th roots of unity: k/d reduced, in [0, 1).
// For d = 1 this is the single angle 0.
std::vector<Rational> primitive_angles(int64_t d) {
  std::vector<Rational> angles;
  if (d == 1) {
    angles.emplace_back(0);
    return angles;
  }
  for (int64_t k = 1; k < d; ++k) {
    if (std::gcd(k, d) == 1) angles.push_back(make_rational(Integer(k), Integer(d)));
  }
  return angles;
}

}  // namespace

HypergeometricParams gamma_to_params(const GammaVector& g) {
  if (g.is_zero()) throw ZeroGammaError();
  if (!is_regular(g)) throw NotRegularError();

  HypergeometricParams pr;
  CyclotomicMultiset m = cyclotomic_multiplicities(g);
  for (const auto& [d, mult] : m.mult) {
    std::vector<Rational>& side = mult > 0 ? pr.alpha : pr.beta;
    int64_t copies = mult > 0 ? mult : -mult;
    for (const Rational& a : primitive_angles(d)) {
      for (int64_t i = 0; i < copies; ++i) side.push_back(a);
    }
  }
  std::sort(pr.alpha.begin(), pr.alpha.end());
  std::sort(pr.beta.begin(), pr.beta.end());
  if (pr.alpha.size() != pr.beta.size() || pr.alpha.empty()) {
    // Degree balance sum phi(d) m_d = 0 holds for every regular gamma.
    throw TheoremViolationError("cyclotomic degree balance failed");
  }
  pr.r = int64_t(pr.alpha.size());

  Integer num(1), den(1);
  for (const auto& e : g.entries()) {
    uint64_t exp = uint64_t(e.nu) *
                   uint64_t(e.exponent < 0 ? -e.exponent : e.exponent);
    Integer p = int_pow(Integer(e.nu), exp);
    if (e.exponent > 0) {
      num *= p;
    } else {
      den *= p;
    }
  }
  pr.scale = make_rational(std::move(num), std::move(den));
  return pr;
}

std::pair<IntPolynomial, IntPolynomial> params_to_polynomials(
    const HypergeometricParams& pr) {
  // Each side holds full orbits of primitive angles, so the multiplicity of
  // Phi_d is (count of angles with denominator d) / phi(d).
  auto side_product = [](const std::vector<Rational>& side) {
    std::map<int64_t, int64_t> count;
    for (const Rational& a : side) count[to_int64(Integer(a.get_den()))]++;
    IntPolynomial prod = IntPolynomial::constant(Integer(1));
    for (const auto& [d, c] : count) {
      int64_t phi = euler_phi(d);
      if (c % phi != 0) throw Error("angle multiset is not a union of orbits");
      prod = prod * cyclotomic_polynomial(d).pow(uint64_t(c / phi));
    }
    return prod;
  };
  return {side_product(pr.alpha), side_product(pr.beta)};
}

CircleInterlacing analyze_circle_interlacing(const HypergeometricParams& pr) {
  CircleInterlacing out;

  // Merged walk around the circle; both inputs are sorted.
  struct Labeled {
    Rational angle;
    bool alpha;
  };
  std::vector<Labeled> merged;
  merged.reserve(pr.alpha.size() + pr.beta.size());
  {
    size_t ia = 0, ib = 0;
    while (ia < pr.alpha.size() || ib < pr.beta.size()) {
      bool take_alpha;
      if (ia == pr.alpha.size()) {
        take_alpha = false;
      } else if (ib == pr.beta.size()) {
        take_alpha = true;
      } else {
        take_alpha = pr.alpha[ia] <= pr.beta[ib];
      }
      if (take_alpha) {
        merged.push_back({pr.alpha[ia++], true});
      } else {
        merged.push_back({pr.beta[ib++], false});
      }
    }
  }

  out.multiplicity_free = true;
  for (size_t i = 0; i + 1 < merged.size(); ++i) {
    if (merged[i].angle == merged[i + 1].angle) {
      out.multiplicity_free = false;
      out.repeated_angle = merged[i].angle;
      break;
    }
  }

  out.alternating = !merged.empty();
  if (out.multiplicity_free) {
    for (size_t i = 0; i < merged.size(); ++i) {
      const Labeled& cur = merged[i];
      const Labeled& next = merged[(i + 1) % merged.size()];
      if (cur.alpha == next.alpha) {
        out.alternating = false;
        out.clash_first = cur.angle;
        out.clash_second = next.angle;
        out.clash_on_alpha = cur.alpha;
        break;
      }
    }
  } else {
    out.alternating = false;
  }

  out.zero_in_beta =
      std::binary_search(pr.beta.begin(), pr.beta.end(), Rational(0));
  return out;
}

bool interlace_on_circle(const HypergeometricParams& pr) {
  return analyze_circle_interlacing(pr).ok();
}

Rational term_ratio(const HypergeometricParams& pr, uint64_t n) {
  // Angle 0 is represented by 1, so representatives live in (0, 1].
  auto factor = [n](const Rational& angle) {
    Rational rep = (angle == 0) ? Rational(1) : angle;
    Rational f = rep + Rational(Integer(n));
    f.canonicalize();
    return f;
  };
  Rational num(1), den(1);
  for (const Rational& a : pr.alpha) num *= factor(a);
  for (const Rational& b : pr.beta) den *= factor(b);
  Rational ratio = pr.scale * num / den;
  ratio.canonicalize();
  return ratio;
}

}  // namespace fratio
