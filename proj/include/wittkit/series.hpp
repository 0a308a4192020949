#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wittkit/arith.hpp"

namespace wittkit {

// A formal power series known modulo z^(order+1): the coefficients of
// z^0..z^order are stored exactly.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  // Missing trailing coefficients are zero; more than order+1 coefficients is
  // a UsageError.
  TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  static TruncatedSeries from_integers(std::size_t order, std::span<const long> coeffs);
  static TruncatedSeries from_integers(std::size_t order, std::initializer_list<long> coeffs) {
    return from_integers(order, std::span<const long>(coeffs.begin(), coeffs.size()));
  }
  static TruncatedSeries from_integers(std::size_t order, const std::vector<Integer>& coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t j) const { return coeffs_[j]; }
  // Coefficient of z^j, zero beyond the truncation.
  Rational coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rational(0); }
  void set(std::size_t j, const Rational& value);
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_integral() const;
  bool is_zero() const;
  // Degree of the last nonzero stored coefficient; -1 for the zero series.
  long degree() const;

  TruncatedSeries truncated(std::size_t order) const;
  // Throws UsageError if a coefficient is not an integer.
  std::vector<Integer> integer_coeffs() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Binary operations work at the smaller of the two truncation orders.
TruncatedSeries ps_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_neg(const TruncatedSeries& a);
TruncatedSeries ps_scale(const TruncatedSeries& a, const Rational& c);
TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_pow(const TruncatedSeries& a, std::int64_t k);
// a(z^d) at the same truncation order.
TruncatedSeries ps_inflate(const TruncatedSeries& a, std::int64_t d);
// z^k * a(z) at the same truncation order.
TruncatedSeries ps_shift(const TruncatedSeries& a, std::size_t k);
TruncatedSeries ps_recip(const TruncatedSeries& a);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return ps_add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return ps_sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return ps_neg(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return ps_mul(a, b); }

// p(z)/q(z) with integer coefficients in ascending order.
struct RationalFunction {
  std::vector<Integer> num;
  std::vector<Integer> den;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

// Taylor expansion at 0. Throws UsageError if q(0) = 0.
TruncatedSeries ratfun_expand(const RationalFunction& h, std::size_t order);

}  // namespace wittkit
