#include "fratio/bezout.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "fratio/errors.hpp"

namespace fratio {

bool SymmetricIntMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

SymmetricIntMatrix bezoutian(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() && q.is_zero()) throw BothZeroError();
  int n = std::max(p.degree(), q.degree());
  n = std::max(n, 0);
  SymmetricIntMatrix b(n);
  // With c(u,v) = p_u q_v - p_v q_u, dividing by (x - y) gives
  // B_{ij} = sum_{k >= 0} c(i+1+k, j-k).
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Integer s(0);
      for (int k = 0; k <= j && i + 1 + k <= n; ++k) {
        s += p.coeff(i + 1 + k) * q.coeff(j - k) -
             p.coeff(j - k) * q.coeff(i + 1 + k);
      }
      b.at(i, j) = std::move(s);
    }
  }
  if (!b.is_symmetric()) {
    throw Error("bezoutian construction produced an asymmetric matrix");
  }
  return b;
}

namespace {

// Fraction-free Bareiss determinant; rows is mutated in place.
Integer bareiss_determinant(std::vector<std::vector<Integer>>& rows) {
  const int n = int(rows.size());
  if (n == 0) return Integer(1);
  int sign = 1;
  Integer prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (rows[size_t(k)][size_t(k)] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (rows[size_t(r)][size_t(k)] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return Integer(0);
      std::swap(rows[size_t(k)], rows[size_t(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = rows[size_t(i)][size_t(j)] * rows[size_t(k)][size_t(k)] -
                    rows[size_t(i)][size_t(k)] * rows[size_t(k)][size_t(j)];
        rows[size_t(i)][size_t(j)] = t / prev;  // exact by Bareiss
      }
      rows[size_t(i)][size_t(k)] = 0;
    }
    prev = rows[size_t(k)][size_t(k)];
  }
  Integer det = rows[size_t(n - 1)][size_t(n - 1)];
  return sign > 0 ? det : Integer(-det);
}

}  // namespace

Integer resultant(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomialError();
  const int m = p.degree();
  const int n = q.degree();
  const int size = m + n;
  if (size == 0) return Integer(1);
  // Sylvester matrix: n rows of p's coefficients, then m rows of q's,
  // highest coefficient first, each shifted one column right.
  const size_t dim = size_t(size);
  std::vector<std::vector<Integer>> rows(dim, std::vector<Integer>(dim));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c <= m; ++c) {
      rows[size_t(r)][size_t(r + c)] = p.coeff(m - c);
    }
  }
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c <= n; ++c) {
      rows[size_t(n + r)][size_t(r + c)] = q.coeff(n - c);
    }
  }
  return bareiss_determinant(rows);
}

Integer determinant(const SymmetricIntMatrix& m) {
  const size_t dim = size_t(m.size());
  std::vector<std::vector<Integer>> rows(dim, std::vector<Integer>(dim));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) rows[size_t(i)][size_t(j)] = m.at(i, j);
  }
  return bareiss_determinant(rows);
}

Inertia inertia(const SymmetricIntMatrix& m) {
  const int n = m.size();
  const size_t dim = size_t(n);
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[size_t(i)][size_t(j)] = Rational(m.at(i, j));
  }

  Inertia out;
  for (int k = 0; k < n; ++k) {
    if (a[size_t(k)][size_t(k)] == 0) {
      // Prefer a nonzero diagonal entry further down (symmetric swap).
      int swap_with = -1;
      for (int l = k + 1; l < n; ++l) {
        if (a[size_t(l)][size_t(l)] != 0) {
          swap_with = l;
          break;
        }
      }
      if (swap_with >= 0) {
        std::swap(a[size_t(k)], a[size_t(swap_with)]);
        for (int i = 0; i < n; ++i) {
          std::swap(a[size_t(i)][size_t(k)], a[size_t(i)][size_t(swap_with)]);
        }
      } else {
        // All remaining diagonal entries vanish; a nonzero off-diagonal
        // a[k][l] can be pulled onto the diagonal by the congruence
        // row_k += row_l, col_k += col_l (pivot becomes 2 a[k][l]).
        int mate = -1;
        for (int l = k + 1; l < n; ++l) {
          if (a[size_t(k)][size_t(l)] != 0) {
            mate = l;
            break;
          }
        }
        if (mate < 0) {
          out.n_zero++;  // the whole row is zero
          continue;
        }
        for (int j = 0; j < n; ++j) {
          a[size_t(k)][size_t(j)] += a[size_t(mate)][size_t(j)];
        }
        for (int i = 0; i < n; ++i) {
          a[size_t(i)][size_t(k)] += a[size_t(i)][size_t(mate)];
        }
      }
    }

    Rational pivot = a[size_t(k)][size_t(k)];
    if (pivot > 0) {
      out.n_plus++;
    } else {
      out.n_minus++;
    }
    for (int i = k + 1; i < n; ++i) {
      if (a[size_t(i)][size_t(k)] == 0) continue;
      Rational f = a[size_t(i)][size_t(k)] / pivot;
      f.canonicalize();
      for (int j = k; j < n; ++j) {
        a[size_t(i)][size_t(j)] -= f * a[size_t(k)][size_t(j)];
        a[size_t(i)][size_t(j)].canonicalize();
      }
      for (int j = 0; j < n; ++j) {
        a[size_t(j)][size_t(i)] = a[size_t(i)][size_t(j)];
      }
    }
  }
  return out;
}

namespace {

// Polynomials over Q, constant term first, trailing zeros trimmed.
using QPoly = std::vector<Rational>;

void qtrim(QPoly& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

QPoly to_qpoly(const IntPolynomial& p) {
  QPoly v(p.coeffs().begin(), p.coeffs().end());
  qtrim(v);
  return v;
}

// Remainder of a by b; b nonzero.
QPoly qrem(QPoly a, const QPoly& b) {
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    f.canonicalize();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= f * b[i];
      a[shift + i].canonicalize();
    }
    qtrim(a);
    if (a.empty()) break;
  }
  return a;
}

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Sign of the polynomial at +inf / -inf.
int sign_at_plus_inf(const QPoly& f) { return sign_of(f.back()); }
int sign_at_minus_inf(const QPoly& f) {
  int s = sign_of(f.back());
  return (f.size() - 1) % 2 == 0 ? s : -s;
}

int sign_variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int64_t winding_degree(const IntPolynomial& p, const IntPolynomial& q) {
  if (!coprime_over_rationals(p, q)) throw NotCoprimeError();
  // Coprime with one side zero forces the other constant: p/q is then a
  // constant self-map, degree 0.
  if (p.is_zero() || q.is_zero()) return 0;

  // Global Cauchy index of p/q: signed remainder sequence starting with the
  // denominator, I = V(-inf) - V(+inf).
  std::vector<QPoly> seq;
  seq.push_back(to_qpoly(q));
  seq.push_back(to_qpoly(p));
  while (seq.back().size() > 1) {
    QPoly r = qrem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;  // cannot happen for coprime inputs
    for (Rational& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  std::vector<int> at_minus, at_plus;
  for (const QPoly& f : seq) {
    at_minus.push_back(sign_at_minus_inf(f));
    at_plus.push_back(sign_at_plus_inf(f));
  }
  int64_t cauchy = sign_variations(at_minus) - sign_variations(at_plus);

  // Crossing through the point at infinity: present only when the map has
  // a pole at t = infinity of odd order.
  int64_t infinity_crossing = 0;
  int gap = p.degree() - q.degree();
  if (gap > 0 && gap % 2 == 1) {
    infinity_crossing = sign_of(Rational(p.leading() * q.leading()));
  }
  return -cauchy + infinity_crossing;
}

bool interlace_on_line(const IntPolynomial& p, const IntPolynomial& q) {
  if (!coprime_over_rationals(p, q)) throw NotCoprimeError();
  int n = std::max({p.degree(), q.degree(), 0});
  if (n == 0) return true;  // constants interlace vacuously
  Inertia in = inertia(bezoutian(p, q));
  int64_t s = in.signature();
  return (s < 0 ? -s : s) == n;
}

}  // namespace fratio
