#pragma once

#include <cstdint>
#include <vector>

#include "fratio/rational.hpp"

namespace fratio {

/// Dense matrix over exact rationals. All algorithms on it (inverse, rank,
/// characteristic polynomial) are exact; nothing here is numeric.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_integral() const;  // every entry has denominator 1

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;

  RationalMatrix inverse() const;  // throws SingularMatrixError
  int rank() const;

  friend bool operator==(const RationalMatrix&,
                         const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

/// Monic characteristic polynomial det(tI - M), constant term first,
/// by the Faddeev-LeVerrier recurrence over exact rationals.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& m);

}  // namespace fratio
