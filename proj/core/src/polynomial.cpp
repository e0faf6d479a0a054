#include "fratio/polynomial.hpp"

#include <sstream>

#include "fratio/errors.hpp"

namespace fratio {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<int64_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (int64_t c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Integer c) {
  std::vector<Integer> v;
  v.push_back(std::move(c));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::monomial(int degree, Integer lead) {
  std::vector<Integer> v(size_t(degree) + 1);
  v[size_t(degree)] = std::move(lead);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_integer_roots(
    const std::vector<int64_t>& roots) {
  IntPolynomial p = constant(Integer(1));
  for (int64_t r : roots) {
    p = p * IntPolynomial{-r, 1};
  }
  return p;
}

bool IntPolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == 1;
}

Integer IntPolynomial::coeff(int i) const {
  if (i < 0 || size_t(i) >= coeffs_.size()) return Integer(0);
  return coeffs_[size_t(i)];
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomialError();
  return coeffs_.back();
}

Integer IntPolynomial::eval(const Integer& x) const {
  Integer acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
    acc.canonicalize();
  }
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<Integer> v(std::max(coeffs_.size(), other.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < coeffs_.size()) v[i] += coeffs_[i];
    if (i < other.coeffs_.size()) v[i] += other.coeffs_[i];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  return *this + (-other);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return IntPolynomial();
  std::vector<Integer> v(coeffs_.size() + other.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < other.coeffs_.size(); ++j) {
      v[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const Integer& scalar) const {
  std::vector<Integer> v = coeffs_;
  for (auto& c : v) c *= scalar;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(uint64_t e) const {
  IntPolynomial acc = constant(Integer(1));
  for (uint64_t i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& num,
                                          const IntPolynomial& den) {
  if (den.is_zero()) throw ZeroPolynomialError();
  if (num.is_zero()) return IntPolynomial();
  if (num.degree() < den.degree()) throw Error("inexact polynomial division");
  std::vector<Integer> rem = num.coeffs_;
  std::vector<Integer> quot(size_t(num.degree() - den.degree()) + 1);
  const Integer& lead = den.leading();
  for (int k = num.degree() - den.degree(); k >= 0; --k) {
    Integer& top = rem[size_t(k + den.degree())];
    if (top % lead != 0) throw Error("inexact polynomial division");
    Integer q = top / lead;
    for (int j = 0; j <= den.degree(); ++j) {
      rem[size_t(k + j)] -= q * den.coeffs_[size_t(j)];
    }
    quot[size_t(k)] = std::move(q);
  }
  for (const Integer& c : rem) {
    if (c != 0) throw Error("inexact polynomial division");
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[size_t(i)];
    if (c == 0) continue;
    Integer abs_c = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (abs_c == 1);
    if (i == 0 || !unit) out << abs_c.get_str();
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

bool coprime_over_rationals(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() && q.is_zero()) return false;
  if (p.is_zero()) return q.degree() == 0;
  if (q.is_zero()) return p.degree() == 0;
  // Euclid over Q; only the degree of the gcd matters.
  std::vector<Rational> a(p.coeffs().begin(), p.coeffs().end());
  std::vector<Rational> b(q.coeffs().begin(), q.coeffs().end());
  auto trim = [](std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      f.canonicalize();
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        a[shift + i] -= f * b[i];
        a[shift + i].canonicalize();
      }
      trim(a);
    }
    std::swap(a, b);
  }
  return a.size() == 1;  // constant gcd
}

}  // namespace fratio
