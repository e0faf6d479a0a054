#include "fratio/search.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "fratio/decide.hpp"
#include "fratio/errors.hpp"
#include "fratio/landau.hpp"

namespace fratio {

GammaVector canonicalize(const GammaVector& g) {
  if (g.is_zero()) throw ZeroGammaError();
  int64_t gcd = g.support_gcd();
  std::vector<GammaEntry> entries = g.entries();
  for (auto& e : entries) e.nu /= gcd;
  return GammaVector(std::move(entries));
}

namespace {

// All support sets of size 1..max_support within {1..max_nu} whose gcd is
// 1, i.e. the primitive representatives under nu -> k*nu.
std::vector<std::vector<int64_t>> primitive_support_sets(
    const SearchBounds& b) {
  std::vector<std::vector<int64_t>> out;
  std::vector<int64_t> current;
  auto rec = [&](auto&& self, int64_t next) -> void {
    if (!current.empty()) {
      int64_t gcd = 0;
      for (int64_t nu : current) gcd = std::gcd(gcd, nu);
      if (gcd == 1) out.push_back(current);
    }
    if (int64_t(current.size()) == b.max_support) return;
    for (int64_t nu = next; nu <= b.max_nu; ++nu) {
      current.push_back(nu);
      self(self, nu + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

void scan_support(const std::vector<int64_t>& support, const SearchBounds& b,
                  std::vector<SearchHit>& hits) {
  const size_t s = support.size();
  // Odometer over exponent vectors in {-E..E} \ {0} per position.
  std::vector<int64_t> e(s, -b.max_exponent);
  while (true) {
    int64_t exp_sum = 0;
    int64_t weighted = 0;
    int64_t height = 0;
    for (size_t i = 0; i < s; ++i) {
      exp_sum += e[i];
      weighted += support[i] * e[i];
      height += support[i] * (e[i] < 0 ? -e[i] : e[i]);
    }
    // Both theorem-side constraints are linear and cheap; the Landau scan
    // only runs on vectors that already satisfy them.
    bool candidate = weighted == 0 && exp_sum == -1 &&
                     (!b.height_cap || height <= *b.height_cap);
    if (candidate) {
      std::vector<GammaEntry> entries(s);
      for (size_t i = 0; i < s; ++i) entries[i] = {support[i], e[i]};
      GammaVector g(std::move(entries));
      if (is_integral(g)) {
        AlgebraicityReport report = decide_algebraic(g);
        if (!report.algebraic) {
          throw TheoremViolationError(
              "integral d=1 vector decided non-algebraic");
        }
        hits.push_back({g, report.d, report.r, height, report.algebraic});
      }
    }
    // Advance the odometer.
    size_t pos = 0;
    while (pos < s) {
      ++e[pos];
      if (e[pos] == 0) ++e[pos];  // exponents are nonzero
      if (e[pos] <= b.max_exponent) break;
      e[pos] = -b.max_exponent;
      ++pos;
    }
    if (pos == s) break;
  }
}

}  // namespace

std::vector<SearchHit> enumerate_integral(const SearchBounds& bounds,
                                          int jobs) {
  if (bounds.max_nu < 1 || bounds.max_support < 1 || bounds.max_exponent < 1) {
    throw Error("search bounds must be >= 1");
  }
  std::vector<std::vector<int64_t>> supports = primitive_support_sets(bounds);

  std::vector<SearchHit> hits;
  if (jobs <= 1) {
    for (const auto& support : supports) {
      scan_support(support, bounds, hits);
    }
  } else {
    // Support sets are independent units of work; each worker fills its own
    // bucket and the deterministic order is restored by the final sort.
    const size_t nworkers = size_t(jobs);
    std::vector<std::vector<SearchHit>> buckets(nworkers);
    std::vector<std::exception_ptr> failures(nworkers);
    std::vector<std::thread> workers;
    workers.reserve(size_t(jobs));
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w]() {
        try {
          for (size_t i = size_t(w); i < supports.size(); i += size_t(jobs)) {
            scan_support(supports[i], bounds, buckets[size_t(w)]);
          }
        } catch (...) {
          failures[size_t(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
    for (auto& bucket : buckets) {
      hits.insert(hits.end(), std::make_move_iterator(bucket.begin()),
                  std::make_move_iterator(bucket.end()));
    }
  }

  std::sort(hits.begin(), hits.end(),
            [](const SearchHit& a, const SearchHit& b) {
              return a.gamma < b.gamma;
            });
  return hits;
}

}  // namespace fratio
