#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fratio/gamma.hpp"

namespace fratio {

struct SearchBounds {
  int64_t max_nu = 1;
  int64_t max_support = 1;
  int64_t max_exponent = 1;
  std::optional<int64_t> height_cap;  // height = sum nu * |gamma_nu|
};

/// One integral dimension-1 vector found by the enumeration, in canonical
/// (primitive) form: the gcd of its support indices is 1.
struct SearchHit {
  GammaVector gamma;
  int64_t d = 0;
  int64_t r = 0;
  int64_t height = 0;
  bool algebraic = false;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

/// Divides every support index by the gcd of all support indices; the
/// canonical representative under the support rescaling nu -> k*nu.
GammaVector canonicalize(const GammaVector& g);

/// All primitive regular gamma vectors within the bounds with d = 1 and a
/// nonnegative Landau function, each cross-checked through the full
/// algebraicity decision. Regularity and d = 1 are linear filters applied
/// before any Landau evaluation; no factorials are computed. Output is
/// sorted lexicographically on the canonical entry list and is therefore
/// deterministic, independent of the number of worker threads.
std::vector<SearchHit> enumerate_integral(const SearchBounds& bounds,
                                          int jobs = 1);

}  // namespace fratio
