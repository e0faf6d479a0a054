#include <doctest.h>

#include "fratio/cyclotomic.hpp"
#include "fratio/errors.hpp"
#include "fratio/monodromy.hpp"
#include "test_support.hpp"

using namespace fratio;
using testsupport::chebyshev_gamma;

namespace {

IntPolynomial to_int_polynomial(const std::vector<Rational>& c) {
  std::vector<Integer> v;
  for (const Rational& x : c) {
    REQUIRE(x.get_den() == 1);
    v.push_back(Integer(x.get_num()));
  }
  return IntPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("companion matrix and characteristic polynomial") {
  IntPolynomial p{-6, 11, -6, 1};  // (t-1)(t-2)(t-3)
  RationalMatrix c = companion_matrix(p);
  CHECK(c.rows() == 3);
  CHECK(to_int_polynomial(characteristic_polynomial(c)) == p);
  CHECK_THROWS_AS(companion_matrix(IntPolynomial{1, 2}), Error);
}

TEST_CASE("build_monodromy on the 1x1 case") {
  CompanionPair pair = build_monodromy(gamma_to_params(GammaVector{{2, 1}, {1, -2}}));
  CHECK(pair.r == 1);
  CHECK(pair.A.at(0, 0) == -1);
  CHECK(pair.B.at(0, 0) == 1);
  CHECK(pair.sigma.at(0, 0) == -1);
}

TEST_CASE("build_monodromy on the chebyshev case") {
  HypergeometricParams pr = gamma_to_params(chebyshev_gamma());
  CompanionPair pair = build_monodromy(pr);
  CHECK(pair.r == 8);

  auto [p, q] = params_to_polynomials(pr);
  CHECK(to_int_polynomial(characteristic_polynomial(pair.A)) == p);
  CHECK(to_int_polynomial(characteristic_polynomial(pair.B)) == q);
  CHECK(pair.B * pair.sigma == pair.A);

  RationalMatrix diff = pair.sigma - RationalMatrix::identity(8);
  CHECK(diff.rank() == 1);

  // Products of cyclotomic polynomials have constant term +-1, so both
  // generators are unimodular.
  CHECK(abs(p.coeff(0)) == 1);
  CHECK(abs(q.coeff(0)) == 1);
}

TEST_CASE("pseudo-reflection structure holds on random vectors") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 25; ++trial) {
    GammaVector g = testsupport::random_regular_gamma(rng, 8, 3, 2);
    if (g.is_zero()) continue;
    CompanionPair pair = build_monodromy(gamma_to_params(g));
    RationalMatrix diff =
        pair.sigma - RationalMatrix::identity(int(pair.r));
    CHECK(diff.rank() <= 1);
    CHECK(pair.B * pair.sigma == pair.A);
  }
}

TEST_CASE("eigenvalue one structure") {
  RationalMatrix one(1, 1);
  one.at(0, 0) = 1;
  CHECK((eigenvalue_one_structure(one) ==
        EigenvalueOneStructure{1, 1}));

  CHECK((eigenvalue_one_structure(RationalMatrix::identity(2)) ==
        EigenvalueOneStructure{2, 1}));

  // Companion of (t-1)^2: a single Jordan block of size 2.
  RationalMatrix unipotent = companion_matrix(IntPolynomial{1, -2, 1});
  CHECK((eigenvalue_one_structure(unipotent) ==
        EigenvalueOneStructure{2, 2}));

  // No eigenvalue 1 at all.
  RationalMatrix minus = companion_matrix(IntPolynomial{1, 1});
  CHECK((eigenvalue_one_structure(minus) ==
        EigenvalueOneStructure{0, 0}));
}

TEST_CASE("eigenvalue one structure of B equals (d, d)") {
  for (const GammaVector& g :
       {chebyshev_gamma(), GammaVector{{2, 1}, {1, -2}},
        GammaVector{{2, 2}, {1, -4}}, GammaVector{{4, 1}, {1, -4}},
        GammaVector{{4, 1}, {2, -1}, {1, -2}}}) {
    int64_t d = dimension(g);
    REQUIRE(d >= 1);
    CompanionPair pair = build_monodromy(gamma_to_params(g));
    CHECK((eigenvalue_one_structure(pair.B) ==
          EigenvalueOneStructure{d, d}));
  }
}

TEST_CASE("element orders") {
  CompanionPair pair = build_monodromy(gamma_to_params(chebyshev_gamma()));
  CHECK(element_order(pair.B, 100) == 30);
  CHECK(element_order(pair.A, 100) == 30);

  RationalMatrix unipotent = companion_matrix(IntPolynomial{1, -2, 1});
  CHECK(element_order(unipotent, 100) == std::nullopt);

  CHECK(element_order(RationalMatrix::identity(3), 5) == 1);

  RationalMatrix singular(2, 2);
  singular.at(0, 0) = 1;
  CHECK_THROWS_AS(element_order(singular, 10), SingularMatrixError);
}

TEST_CASE("unbounded order for dimension at least two") {
  for (const GammaVector& g :
       {GammaVector{{2, 2}, {1, -4}}, GammaVector{{4, 1}, {2, -1}, {1, -2}},
        GammaVector{{4, 1}, {1, -4}}}) {
    REQUIRE(dimension(g) >= 2);
    CompanionPair pair = build_monodromy(gamma_to_params(g));
    CHECK(element_order(pair.B, 500) == std::nullopt);
  }
}

TEST_CASE("rational matrix plumbing") {
  RationalMatrix m(2, 2);
  m.at(0, 0) = Rational(1, 2);
  m.at(0, 1) = 1;
  m.at(1, 1) = 2;
  CHECK_FALSE(m.is_integral());
  RationalMatrix inv = m.inverse();
  CHECK(m * inv == RationalMatrix::identity(2));
  CHECK(m.rank() == 2);

  RationalMatrix s(2, 2);
  s.at(0, 0) = 1;
  s.at(0, 1) = 2;
  s.at(1, 0) = 2;
  s.at(1, 1) = 4;
  CHECK(s.rank() == 1);
  CHECK_THROWS_AS(s.inverse(), SingularMatrixError);
}
