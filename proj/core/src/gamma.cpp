#include "fratio/gamma.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fratio/errors.hpp"

namespace fratio {

GammaVector::GammaVector(std::vector<GammaEntry> entries) {
  std::map<int64_t, int64_t> merged;
  for (const auto& e : entries) {
    if (e.nu < 1) throw Error("gamma support index must be >= 1");
    merged[e.nu] += e.exponent;
  }
  entries_.reserve(merged.size());
  for (const auto& [nu, exponent] : merged) {
    if (exponent != 0) entries_.push_back({nu, exponent});
  }
}

GammaVector::GammaVector(std::initializer_list<GammaEntry> entries)
    : GammaVector(std::vector<GammaEntry>(entries)) {}

int64_t GammaVector::max_nu() const {
  return entries_.empty() ? 0 : entries_.back().nu;
}

int64_t GammaVector::support_gcd() const {
  int64_t g = 0;
  for (const auto& e : entries_) g = std::gcd(g, e.nu);
  return g;
}

int64_t GammaVector::height() const {
  int64_t h = 0;
  for (const auto& e : entries_) h += e.nu * std::abs(e.exponent);
  return h;
}

GammaVector GammaVector::operator+(const GammaVector& other) const {
  std::vector<GammaEntry> all = entries_;
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return GammaVector(std::move(all));
}

GammaVector GammaVector::scaled_support(int64_t k) const {
  if (k < 1) throw Error("support scale factor must be >= 1");
  std::vector<GammaEntry> scaled = entries_;
  for (auto& e : scaled) e.nu *= k;
  return GammaVector(std::move(scaled));
}

bool is_regular(const GammaVector& g) {
  int64_t s = 0;
  for (const auto& e : g.entries()) s += e.nu * e.exponent;
  return s == 0;
}

int64_t dimension(const GammaVector& g) {
  int64_t s = 0;
  for (const auto& e : g.entries()) s += e.exponent;
  return -s;
}

Rational term(const GammaVector& g, uint64_t n) {
  // Each distinct (nu*n)! is computed once per call; no cross-call cache.
  std::map<uint64_t, Integer> fact;
  Integer num(1), den(1);
  for (const auto& e : g.entries()) {
    uint64_t m = uint64_t(e.nu) * n;
    auto it = fact.find(m);
    if (it == fact.end()) it = fact.emplace(m, factorial(m)).first;
    uint64_t a = uint64_t(e.exponent < 0 ? -e.exponent : e.exponent);
    Integer p = int_pow(it->second, a);
    if (e.exponent > 0) {
      num *= p;
    } else {
      den *= p;
    }
  }
  return make_rational(std::move(num), std::move(den));
}

int64_t factorial_valuation(uint64_t m, uint64_t p) {
  int64_t s = 0;
  for (uint64_t q = p; q <= m; ) {
    s += int64_t(m / q);
    if (q > m / p) break;  // next power would overflow past m anyway
    q *= p;
  }
  return s;
}

int64_t valuation_direct(const GammaVector& g, uint64_t n, uint64_t p) {
  if (!is_prime(p)) throw NotPrimeError(p);
  int64_t s = 0;
  for (const auto& e : g.entries()) {
    s += e.exponent * factorial_valuation(uint64_t(e.nu) * n, p);
  }
  return s;
}

}  // namespace fratio
