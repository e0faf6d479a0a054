#include "fratio/monodromy.hpp"

#include <utility>

#include "fratio/errors.hpp"

namespace fratio {

RationalMatrix companion_matrix(const IntPolynomial& monic) {
  if (!monic.is_monic()) throw Error("companion matrix needs a monic polynomial");
  const int r = monic.degree();
  RationalMatrix c(r, r);
  for (int j = 0; j + 1 < r; ++j) c.at(j + 1, j) = 1;
  for (int i = 0; i < r; ++i) {
    c.at(i, r - 1) = Rational(-monic.coeff(i));
  }
  return c;
}

namespace {

bool charpoly_matches(const RationalMatrix& m, const IntPolynomial& p) {
  std::vector<Rational> c = characteristic_polynomial(m);
  if (int(c.size()) != p.degree() + 1) return false;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] != Rational(p.coeff(int(i)))) return false;
  }
  return true;
}

}  // namespace

CompanionPair build_monodromy(const HypergeometricParams& pr) {
  auto [p, q] = params_to_polynomials(pr);
  if (!coprime_over_rationals(p, q)) throw NotCoprimeError();

  CompanionPair pair;
  pair.r = pr.r;
  pair.A = companion_matrix(p);
  pair.B = companion_matrix(q);
  pair.sigma = pair.B.inverse() * pair.A;

  // The construction is verified rather than trusted.
  if (!charpoly_matches(pair.A, p) || !charpoly_matches(pair.B, q)) {
    throw Error("companion matrix has wrong characteristic polynomial");
  }
  if (!(pair.B * pair.sigma == pair.A)) {
    throw Error("monodromy relation A = B sigma failed");
  }
  RationalMatrix diff = pair.sigma - RationalMatrix::identity(int(pair.r));
  if (diff.rank() > 1) {
    throw Error("local monodromy at 1 is not a pseudo-reflection");
  }
  return pair;
}

EigenvalueOneStructure eigenvalue_one_structure(const RationalMatrix& m) {
  if (!m.is_square()) throw Error("eigenvalue structure of a non-square matrix");
  const int n = m.rows();

  EigenvalueOneStructure out;

  // Multiplicity of the root 1 of det(tI - M): divide by (t - 1) while the
  // remainder (the value at 1) vanishes.
  std::vector<Rational> c = characteristic_polynomial(m);
  while (c.size() > 1) {
    // Synthetic division by (t - 1); remainder is the value at 1.
    std::vector<Rational> quotient(c.size() - 1);
    Rational carry(0);
    for (size_t i = c.size(); i-- > 1;) {
      carry += c[i];
      carry.canonicalize();
      quotient[i - 1] = carry;
    }
    Rational value = carry + c[0];
    value.canonicalize();
    if (value != 0) break;
    out.algebraic_multiplicity++;
    c = std::move(quotient);
  }

  // Largest Jordan block at 1: smallest k with rank((M-I)^k) stabilizing.
  RationalMatrix nil = m - RationalMatrix::identity(n);
  RationalMatrix power = RationalMatrix::identity(n);
  int prev_rank = n;
  for (int k = 1; k <= n + 1; ++k) {
    power = power * nil;
    int rk = power.rank();
    if (rk == prev_rank) {
      out.largest_jordan_block = k - 1;
      return out;
    }
    prev_rank = rk;
  }
  out.largest_jordan_block = n;
  return out;
}

namespace {

// Power loop over plain integer matrices; companions of monic integer
// polynomials and their products stay integral, and mpz arithmetic is much
// cheaper than canonicalized mpq.
std::optional<int64_t> element_order_integral(const RationalMatrix& m,
                                              int64_t cap) {
  const int n = m.rows();
  std::vector<Integer> base(size_t(n) * n), power(size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      base[size_t(i) * n + j] = Integer(m.at(i, j).get_num());
      power[size_t(i) * n + j] = base[size_t(i) * n + j];
    }
  }
  auto is_identity = [&](const std::vector<Integer>& v) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (v[size_t(i) * n + j] != (i == j ? 1 : 0)) return false;
      }
    }
    return true;
  };
  std::vector<Integer> next(size_t(n) * n);
  for (int64_t k = 1; k <= cap; ++k) {
    if (is_identity(power)) return k;  // power holds M^k here
    for (auto& x : next) x = 0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) {
        const Integer& pil = power[size_t(i) * n + l];
        if (pil == 0) continue;
        for (int j = 0; j < n; ++j) {
          next[size_t(i) * n + j] += pil * base[size_t(l) * n + j];
        }
      }
    }
    std::swap(power, next);
  }
  return std::nullopt;
}

}  // namespace

std::optional<int64_t> element_order(const RationalMatrix& m, int64_t cap) {
  if (!m.is_square()) throw Error("element order of a non-square matrix");
  const int n = m.rows();
  if (m.rank() != n) throw SingularMatrixError();
  if (n == 0) return 1;

  if (m.is_integral()) return element_order_integral(m, cap);

  RationalMatrix identity = RationalMatrix::identity(n);
  RationalMatrix power = m;
  for (int64_t k = 1; k <= cap; ++k) {
    if (power == identity) return k;
    power = power * m;
  }
  return std::nullopt;
}

}  // namespace fratio
