#include "fratio/landau.hpp"

#include <set>

#include "fratio/errors.hpp"

namespace fratio {

namespace {

void require_regular(const GammaVector& g) {
  if (!is_regular(g)) throw NotRegularError();
}

// Reduced fractions k/nu over the support, mapped to [0, 1), with 0 always
// present. L is constant between consecutive candidates.
std::set<Rational> breakpoint_candidates(const GammaVector& g) {
  std::set<Rational> points;
  points.insert(Rational(0));
  for (const auto& e : g.entries()) {
    for (int64_t k = 1; k < e.nu; ++k) {
      points.insert(make_rational(Integer(k), Integer(e.nu)));
    }
  }
  return points;
}

}  // namespace

int64_t landau_value(const GammaVector& g, const Rational& x) {
  require_regular(g);
  // -sum gamma * frac(nu x) equals sum gamma * floor(nu x) by regularity.
  Integer s(0);
  for (const auto& e : g.entries()) {
    Rational nx = x * Rational(e.nu);
    nx.canonicalize();
    s += Integer(e.exponent) * floor_rational(nx);
  }
  return to_int64(s);
}

LandauProfile landau_profile(const GammaVector& g) {
  require_regular(g);
  LandauProfile profile;
  profile.d = dimension(g);
  for (const Rational& b : breakpoint_candidates(g)) {
    profile.breakpoints.push_back(b);
    profile.values.push_back(landau_value(g, b));
  }
  profile.min_value = profile.values.front();
  profile.max_value = profile.values.front();
  for (int64_t v : profile.values) {
    profile.min_value = std::min(profile.min_value, v);
    profile.max_value = std::max(profile.max_value, v);
  }
  return profile;
}

bool is_integral(const GammaVector& g) {
  require_regular(g);
  for (const Rational& b : breakpoint_candidates(g)) {
    if (landau_value(g, b) < 0) return false;
  }
  return true;
}

int64_t valuation_landau(const GammaVector& g, uint64_t n, uint64_t p) {
  require_regular(g);
  if (!is_prime(p)) throw NotPrimeError(p);
  // L vanishes on [0, 1/max_nu), so terms with p^k > max_nu * n are zero.
  unsigned __int128 bound =
      (unsigned __int128)(g.is_zero() ? 0 : g.max_nu()) * n;
  int64_t s = 0;
  for (unsigned __int128 pk = p; pk <= bound; pk *= p) {
    s += landau_value(g, make_rational(Integer(n), Integer(uint64_t(pk))));
  }
  return s;
}

}  // namespace fratio
