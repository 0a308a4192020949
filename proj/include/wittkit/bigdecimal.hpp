#pragma once

#include <string>

#include <mpfr.h>

#include "wittkit/arith.hpp"

namespace wittkit {

// Guard digits carried on top of the requested precision.
inline constexpr int kGuardDigits = 10;

// Binary precision that holds `digits` decimal digits plus a few spare bits.
mpfr_prec_t bits_for_digits(int digits);

// Owning wrapper around an MPFR value.
class BigDecimal {
 public:
  explicit BigDecimal(mpfr_prec_t bits = 64);
  BigDecimal(const Rational& value, mpfr_prec_t bits);
  BigDecimal(const BigDecimal& other);
  BigDecimal(BigDecimal&& other) noexcept;
  BigDecimal& operator=(const BigDecimal& other);
  BigDecimal& operator=(BigDecimal&& other) noexcept;
  ~BigDecimal();

  // Throws UsageError on malformed input.
  static BigDecimal parse(const std::string& text, mpfr_prec_t bits);

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  // `digits` significant digits, rounded to nearest. Plain decimal notation
  // for moderate exponents, otherwise d.ddde+XX.
  std::string to_string(int digits) const;

 private:
  mpfr_t value_;
  bool live_ = false;
};

}  // namespace wittkit
