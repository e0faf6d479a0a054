#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fratio/polynomial.hpp"
#include "fratio/rational.hpp"

namespace fratio {

/// Dense symmetric matrix of arbitrary-precision integers.
class SymmetricIntMatrix {
 public:
  SymmetricIntMatrix() = default;
  explicit SymmetricIntMatrix(int n) : n_(n), a_(size_t(n) * n) {}

  int size() const { return n_; }
  const Integer& at(int i, int j) const { return a_[size_t(i) * n_ + j]; }
  Integer& at(int i, int j) { return a_[size_t(i) * n_ + j]; }

  bool is_symmetric() const;

  friend bool operator==(const SymmetricIntMatrix&,
                         const SymmetricIntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Integer> a_;
};

/// Coefficient matrix of (p(x)q(y) - p(y)q(x)) / (x - y), an exact
/// two-variable division. Size max(deg p, deg q); symmetric.
SymmetricIntMatrix bezoutian(const IntPolynomial& p, const IntPolynomial& q);

/// Res(p, q) = lc(p)^{deg q} * prod q(root_i(p)), computed as a Sylvester
/// determinant by fraction-free (Bareiss) elimination.
Integer resultant(const IntPolynomial& p, const IntPolynomial& q);

/// Exact determinant of a symmetric integer matrix (Bareiss).
Integer determinant(const SymmetricIntMatrix& m);

/// Signs of the eigenvalues of a symmetric matrix.
struct Inertia {
  int64_t n_plus = 0;
  int64_t n_minus = 0;
  int64_t n_zero = 0;

  int64_t signature() const { return n_plus - n_minus; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia by symmetric congruence reduction over the rationals
/// (Sylvester's law of inertia). Zero diagonal pivots are repaired by the
/// symmetric transvection row_k += row_l, col_k += col_l, which leaves the
/// congruence class unchanged.
Inertia inertia(const SymmetricIntMatrix& m);

/// Topological degree of the self-map of the real projective line given by
/// p/q: the global Cauchy index of p/q over the whole line (sign-variation
/// counts of the signed remainder sequence at -inf and +inf) plus the
/// crossing through infinity when deg p > deg q with odd gap. Orientation
/// is pinned so that p = t, q = 1 has degree +1. Equals the signature of
/// bezoutian(p, q).
int64_t winding_degree(const IntPolynomial& p, const IntPolynomial& q);

/// True iff the Bezoutian form is definite, i.e. |signature| equals
/// max(deg p, deg q); equivalently the real roots of p and q strictly
/// interlace.
bool interlace_on_line(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace fratio
