#include "int_series.hpp"

#include <algorithm>

namespace wittkit::detail {

ScaledPoly to_scaled(const TruncatedSeries& a, std::size_t order) {
  ScaledPoly s{IntPoly(order + 1), Integer(1)};
  for (std::size_t j = 0; j <= order; ++j) {
    mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), a[j].get_den_mpz_t());
  }
  for (std::size_t j = 0; j <= order; ++j) {
    s.values[j] = a[j].get_num() * (s.den / a[j].get_den());
  }
  return s;
}

TruncatedSeries from_scaled(const IntPoly& values, const Integer& den) {
  std::vector<Rational> coeffs(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    coeffs[j] = Rational(values[j], den);
    coeffs[j].canonicalize();
  }
  return TruncatedSeries(values.size() - 1, std::move(coeffs));
}

IntPoly mul_trunc(const IntPoly& a, const IntPoly& b) {
  std::size_t n = std::min(a.size(), b.size());
  IntPoly out(n);
  // Skip zero rows; the Witt and peeling inputs are often sparse.
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
  return out;
}

IntPoly pow_trunc(const IntPoly& a, std::int64_t k) {
  IntPoly result(a.size());
  if (!result.empty()) result[0] = 1;
  IntPoly base = a;
  while (k > 0) {
    if (k & 1) result = mul_trunc(result, base);
    k >>= 1;
    if (k > 0) base = mul_trunc(base, base);
  }
  return result;
}

IntPoly inflate(const IntPoly& a, std::int64_t d) {
  IntPoly out(a.size());
  auto step = static_cast<std::size_t>(d);
  for (std::size_t j = 0; j * step < a.size(); ++j) out[j * step] = a[j];
  return out;
}

void mul_binomial_factor(IntPoly& a, std::size_t n, const Integer& e) {
  if (e == 0 || n == 0 || n >= a.size()) return;
  // Coefficients of (1 - x)^e: c_t = (-1)^t C(e, t), built incrementally.
  std::size_t tmax = (a.size() - 1) / n;
  std::vector<Integer> c(tmax + 1);
  c[0] = 1;
  for (std::size_t t = 1; t <= tmax; ++t) {
    // c_t = c_{t-1} * (e - t + 1) / t * (-1)
    Integer num = c[t - 1] * (e - static_cast<long>(t - 1));
    mpz_divexact_ui(c[t].get_mpz_t(), num.get_mpz_t(), t);
    c[t] = -c[t];
  }
  // In place from the top so each source coefficient is read before it is
  // overwritten.
  for (std::size_t i = a.size(); i-- > 0;) {
    for (std::size_t t = 1; t <= tmax && t * n <= i; ++t) {
      if (c[t] == 0 || a[i - t * n] == 0) continue;
      mpz_addmul(a[i].get_mpz_t(), c[t].get_mpz_t(), a[i - t * n].get_mpz_t());
    }
  }
}

}  // namespace wittkit::detail
