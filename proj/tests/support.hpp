#pragma once

// Shared generators and brute-force oracles for the test binaries. Nothing
// here calls into the library's own combinatorics, so the oracles stay
// independent of the code they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "wittkit/arith.hpp"
#include "wittkit/series.hpp"

namespace testkit {

using wittkit::Integer;
using wittkit::Rational;
using wittkit::TruncatedSeries;

// splitmix64; fixed seeds keep every property run reproducible
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  std::vector<long> poly(int max_degree, long lo, long hi) {
    std::vector<long> c(static_cast<std::size_t>(range(0, max_degree)) + 1);
    for (auto& x : c) x = range(lo, hi);
    return c;
  }

 private:
  std::uint64_t state_;
};

inline TruncatedSeries series(std::size_t order, const std::vector<long>& c) {
  return TruncatedSeries::from_integers(order, std::span<const long>(c.data(), std::min(c.size(), order + 1)));
}

inline int mu(long n) {
  int m = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

// plain quadratic products over std::vector<Rational>
using Poly = std::vector<Rational>;

inline Poly poly_mul(const Poly& a, const Poly& b, std::size_t order) {
  Poly c(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Poly to_poly(const TruncatedSeries& f) { return Poly(f.coeffs().begin(), f.coeffs().end()); }

// (1/r) sum_{d|r} mu(d) f(z^d)^{r/d}, straight from the definition
inline Poly witt_oracle(const TruncatedSeries& f, long r) {
  std::size_t N = f.order();
  Poly out(N + 1);
  for (long d = 1; d <= r; ++d) {
    if (r % d || mu(d) == 0) continue;
    Poly inflated(N + 1);
    for (std::size_t j = 0; j * d <= N; ++j) inflated[j * d] = f[j];
    Poly p(N + 1);
    p[0] = 1;
    for (long e = 0; e < r / d; ++e) p = poly_mul(p, inflated, N);
    for (std::size_t j = 0; j <= N; ++j) out[j] += mu(d) * p[j];
  }
  for (auto& x : out) x /= r;
  return out;
}

// aperiodic circular words with the given content, counted by brute force
inline long necklace_oracle(const std::vector<int>& content) {
  std::vector<int> w;
  for (std::size_t i = 0; i < content.size(); ++i) w.insert(w.end(), content[i], static_cast<int>(i));
  const std::size_t n = w.size();
  if (n == 0) return 0;
  long aperiodic = 0;
  do {
    bool primitive = true;
    for (std::size_t s = 1; s < n && primitive; ++s) {
      if (n % s) continue;
      primitive = !std::equal(w.begin(), w.end() - static_cast<long>(s), w.begin() + static_cast<long>(s));
    }
    if (primitive) ++aperiodic;
  } while (std::next_permutation(w.begin(), w.end()));
  return aperiodic / static_cast<long>(n);
}

// aperiodic words of length n over alpha letters, by enumeration
inline long necklace_alpha_oracle(int alpha, int n) {
  long total = 1;
  for (int i = 0; i < n; ++i) total *= alpha;
  long aperiodic = 0;
  std::vector<int> w(static_cast<std::size_t>(n));
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (auto& x : w) { x = static_cast<int>(c % alpha); c /= alpha; }
    bool primitive = true;
    for (int s = 1; s < n && primitive; ++s) {
      if (n % s) continue;
      primitive = !std::equal(w.begin(), w.end() - s, w.begin() + s);
    }
    if (primitive) ++aperiodic;
  }
  return aperiodic / n;
}

}  // namespace testkit
