#pragma once

#include <stdexcept>
#include <string>

namespace fratio {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The gamma vector violates sum(nu * gamma_nu) = 0.
class NotRegularError : public Error {
 public:
  NotRegularError() : Error("gamma vector is not regular") {}
};

/// An operation that needs a nonzero gamma vector received the zero vector.
class ZeroGammaError : public Error {
 public:
  ZeroGammaError() : Error("gamma vector is zero") {}
};

/// A valuation argument failed the primality check.
class NotPrimeError : public Error {
 public:
  explicit NotPrimeError(unsigned long long p)
      : Error("not a prime: " + std::to_string(p)) {}
};

/// Two polynomials required to be coprime share a factor.
class NotCoprimeError : public Error {
 public:
  NotCoprimeError() : Error("polynomials are not coprime") {}
};

/// Both polynomial arguments are identically zero.
class BothZeroError : public Error {
 public:
  BothZeroError() : Error("both polynomials are zero") {}
};

/// A nonzero polynomial was required.
class ZeroPolynomialError : public Error {
 public:
  ZeroPolynomialError() : Error("polynomial is zero") {}
};

/// A matrix required to be invertible is singular.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError() : Error("matrix is singular") {}
};

/// The two independent algebraicity routes disagreed. This signals an
/// implementation bug, never a property of the input.
class TheoremViolationError : public Error {
 public:
  explicit TheoremViolationError(const std::string& detail)
      : Error("internal theorem violation: " + detail) {}
};

}  // namespace fratio
