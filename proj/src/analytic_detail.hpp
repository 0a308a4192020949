#pragma once

// Absolute-accuracy kernels behind the digit-based analytic API. Each writes
// a value within 2^-bits of the true one and sets the precision of `out`.

#include <cstdint>

#include <mpfr.h>

#include "wittkit/analytic.hpp"

namespace wittkit::detail {

void hurwitz_abs(mpfr_ptr out, std::int64_t s, const Rational& a, long bits);
void zeta_abs(mpfr_ptr out, std::int64_t s, long bits);
void partial_zeta_abs(mpfr_ptr out, std::uint64_t m, std::int64_t s, long bits);
void l_series_abs(mpfr_ptr out, std::int64_t s, const RealCharacter& chi, long bits);

// log2 |x| for nonzero x, without overflow for tiny values.
double log2_abs(mpfr_srcptr x);
double log2_abs(const Integer& x);

// E_1(x) for x > 0.
void exp_integral_e1(mpfr_ptr out, double x);

// RAII scratch value.
class Scratch {
 public:
  explicit Scratch(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  operator mpfr_ptr() { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace wittkit::detail
