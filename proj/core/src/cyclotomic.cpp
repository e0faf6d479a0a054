#include "fratio/cyclotomic.hpp"

#include <algorithm>
#include <map>

#include "fratio/errors.hpp"

namespace fratio {

std::vector<int64_t> divisors(int64_t n) {
  if (n < 1) throw Error("divisors of a non-positive integer");
  std::vector<int64_t> small, large;
  for (int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int64_t euler_phi(int64_t n) {
  if (n < 1) throw Error("euler_phi of a non-positive integer");
  int64_t result = n;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic_polynomial(int64_t d) {
  if (d < 1) throw Error("cyclotomic index must be >= 1");
  // Phi_e = (t^e - 1) / prod_{f | e, f < e} Phi_f, filled in divisor order.
  std::map<int64_t, IntPolynomial> phi;
  for (int64_t e : divisors(d)) {
    IntPolynomial num =
        IntPolynomial::monomial(int(e)) - IntPolynomial::constant(Integer(1));
    IntPolynomial den = IntPolynomial::constant(Integer(1));
    for (int64_t f : divisors(e)) {
      if (f < e) den = den * phi.at(f);
    }
    phi[e] = IntPolynomial::divide_exact(num, den);
  }
  return phi.at(d);
}

}  // namespace fratio
