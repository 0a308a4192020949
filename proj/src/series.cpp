#include "wittkit/series.hpp"

#include <algorithm>

#include "int_series.hpp"
#include "wittkit/error.hpp"

namespace wittkit {

using detail::from_scaled;
using detail::to_scaled;
using Scaled = detail::ScaledPoly;

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > order + 1) {
    throw UsageError("series has " + std::to_string(coeffs_.size()) +
                     " coefficients but order " + std::to_string(order));
  }
  coeffs_.resize(order + 1);
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::size_t order, std::span<const long> coeffs) {
  std::vector<Rational> q(coeffs.begin(), coeffs.end());
  return TruncatedSeries(order, std::move(q));
}

TruncatedSeries TruncatedSeries::from_integers(std::size_t order, const std::vector<Integer>& coeffs) {
  std::vector<Rational> q;
  q.reserve(coeffs.size());
  for (const auto& c : coeffs) q.emplace_back(c);
  return TruncatedSeries(order, std::move(q));
}

void TruncatedSeries::set(std::size_t j, const Rational& value) {
  if (j > order()) throw UsageError("coefficient index beyond truncation order");
  coeffs_[j] = value;
  coeffs_[j].canonicalize();
}

bool TruncatedSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

long TruncatedSeries::degree() const {
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    if (coeffs_[j] != 0) return static_cast<long>(j);
  }
  return -1;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw UsageError("cannot raise truncation order");
  return TruncatedSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

std::vector<Integer> TruncatedSeries::integer_coeffs() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!is_integer(coeffs_[j])) {
      throw UsageError("coefficient of z^" + std::to_string(j) + " is not an integer: " +
                       coeffs_[j].get_str());
    }
    out.push_back(coeffs_[j].get_num());
  }
  return out;
}

TruncatedSeries ps_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) c[j] = a[j] + b[j];
  return TruncatedSeries(n, std::move(c));
}

TruncatedSeries ps_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) c[j] = a[j] - b[j];
  return TruncatedSeries(n, std::move(c));
}

TruncatedSeries ps_neg(const TruncatedSeries& a) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = -x;
  return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries ps_scale(const TruncatedSeries& a, const Rational& k) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= k;
  return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  Scaled sa = to_scaled(a, n);
  Scaled sb = to_scaled(b, n);
  return from_scaled(detail::mul_trunc(sa.values, sb.values), sa.den * sb.den);
}

TruncatedSeries ps_pow(const TruncatedSeries& a, std::int64_t k) {
  if (k < 0) throw UsageError("ps_pow: exponent must be >= 0 (use ps_recip or ratfun_expand)");
  Scaled sa = to_scaled(a, a.order());
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), sa.den.get_mpz_t(), static_cast<unsigned long>(k));
  return from_scaled(detail::pow_trunc(sa.values, k), den);
}

TruncatedSeries ps_inflate(const TruncatedSeries& a, std::int64_t d) {
  if (d < 1) throw UsageError("ps_inflate: d must be >= 1");
  TruncatedSeries out(a.order());
  auto step = static_cast<std::size_t>(d);
  for (std::size_t j = 0; j * step <= a.order(); ++j) out.set(j * step, a[j]);
  return out;
}

TruncatedSeries ps_shift(const TruncatedSeries& a, std::size_t k) {
  TruncatedSeries out(a.order());
  for (std::size_t j = 0; j + k <= a.order(); ++j) out.set(j + k, a[j]);
  return out;
}

TruncatedSeries ps_recip(const TruncatedSeries& a) {
  if (a[0] == 0) throw UsageError("ps_recip: constant term is zero");
  std::size_t n = a.order();
  std::vector<Rational> b(n + 1);
  Rational inv = 1 / a[0];
  b[0] = inv;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (a[i] != 0) acc += a[i] * b[k - i];
    }
    b[k] = -acc * inv;
  }
  return TruncatedSeries(n, std::move(b));
}

TruncatedSeries ratfun_expand(const RationalFunction& h, std::size_t order) {
  if (h.den.empty() || h.den[0] == 0) {
    throw UsageError("ratfun_expand: denominator vanishes at z = 0");
  }
  const Integer& q0 = h.den[0];
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = n < h.num.size() ? Rational(h.num[n]) : Rational(0);
    for (std::size_t i = 1; i <= n && i < h.den.size(); ++i) {
      if (h.den[i] != 0) acc -= Rational(h.den[i]) * c[n - i];
    }
    c[n] = acc / Rational(q0);
  }
  return TruncatedSeries(order, std::move(c));
}

}  // namespace wittkit
