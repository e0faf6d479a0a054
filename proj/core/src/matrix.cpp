#include "fratio/matrix.hpp"

#include <utility>
#include <vector>

#include "fratio/errors.hpp"

namespace fratio {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RationalMatrix::is_integral() const {
  for (const Rational& x : a_) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix product shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        Rational t = aik * other.at(k, j);
        t.canonicalize();
        out.at(i, j) += t;
        out.at(i, j).canonicalize();
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error("matrix sum shape mismatch");
  }
  RationalMatrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) {
    out.a_[i] = a_[i] + other.a_[i];
    out.a_[i].canonicalize();
  }
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error("matrix difference shape mismatch");
  }
  RationalMatrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) {
    out.a_[i] = a_[i] - other.a_[i];
    out.a_[i].canonicalize();
  }
  return out;
}

RationalMatrix RationalMatrix::inverse() const {
  if (!is_square()) throw Error("inverse of a non-square matrix");
  const int n = rows_;
  RationalMatrix work = *this;
  RationalMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrixError();
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(col, j), work.at(pivot, j));
        std::swap(inv.at(col, j), inv.at(pivot, j));
      }
    }
    Rational p = work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) /= p;
      work.at(col, j).canonicalize();
      inv.at(col, j) /= p;
      inv.at(col, j).canonicalize();
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      Rational f = work.at(r, col);
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        work.at(r, j).canonicalize();
        inv.at(r, j) -= f * inv.at(col, j);
        inv.at(r, j).canonicalize();
      }
    }
  }
  return inv;
}

int RationalMatrix::rank() const {
  RationalMatrix work = *this;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int r = row; r < rows_; ++r) {
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int j = 0; j < cols_; ++j) {
        std::swap(work.at(row, j), work.at(pivot, j));
      }
    }
    for (int r = row + 1; r < rows_; ++r) {
      if (work.at(r, col) == 0) continue;
      Rational f = work.at(r, col) / work.at(row, col);
      f.canonicalize();
      for (int j = col; j < cols_; ++j) {
        work.at(r, j) -= f * work.at(row, j);
        work.at(r, j).canonicalize();
      }
    }
    ++rank;
    ++row;
  }
  return rank;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) throw Error("characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  std::vector<Rational> c(size_t(n) + 1);
  c[size_t(n)] = 1;
  if (n == 0) return c;
  // Faddeev-LeVerrier: M_1 = I; c_{n-k} = -tr(A M_k)/k;
  // M_{k+1} = A M_k + c_{n-k} I.
  RationalMatrix mk = RationalMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    RationalMatrix am = m * mk;
    Rational trace(0);
    for (int i = 0; i < n; ++i) trace += am.at(i, i);
    Rational ck = -trace / Rational(k);
    ck.canonicalize();
    c[size_t(n - k)] = ck;
    if (k < n) {
      for (int i = 0; i < n; ++i) am.at(i, i) += ck;
      mk = std::move(am);
    }
  }
  return c;
}

}  // namespace fratio
