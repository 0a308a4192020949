#include <cmath>

#include "analytic_detail.hpp"
#include "wittkit/error.hpp"

namespace wittkit {

namespace detail {

namespace {

// Euler-Maclaurin with M explicit terms. Returns false when the correction
// terms start growing before reaching the tolerance, i.e. M is too small.
bool euler_maclaurin(mpfr_ptr out, std::int64_t s, const Rational& a, long M, long bits) {
  const mpfr_prec_t prec = mpfr_get_prec(out);
  Scratch av(prec), x(prec), x2(prec), tmp(prec), F(prec), T(prec), tol(64), prev(64), absT(64);
  mpfr_set_q(av, a.get_mpq_t(), MPFR_RNDN);
  mpfr_set_zero(out, 1);
  for (long n = 0; n < M; ++n) {
    mpfr_add_si(tmp, av, n, MPFR_RNDN);
    mpfr_pow_si(tmp, tmp, -s, MPFR_RNDN);
    mpfr_add(out, out, tmp, MPFR_RNDN);
  }
  mpfr_add_si(x, av, M, MPFR_RNDN);
  mpfr_pow_si(tmp, x, 1 - s, MPFR_RNDN);
  mpfr_div_si(tmp, tmp, s - 1, MPFR_RNDN);
  mpfr_add(out, out, tmp, MPFR_RNDN);
  mpfr_pow_si(tmp, x, -s, MPFR_RNDN);
  mpfr_div_ui(tmp, tmp, 2, MPFR_RNDN);
  mpfr_add(out, out, tmp, MPFR_RNDN);

  // T_i = B_2i / (2i)! * s(s+1)...(s+2i-2) * x^(-s-2i+1) = B_2i * F_i.
  mpfr_pow_si(F, x, -s - 1, MPFR_RNDN);
  mpfr_mul_si(F, F, s, MPFR_RNDN);
  mpfr_div_ui(F, F, 2, MPFR_RNDN);
  mpfr_sqr(x2, x, MPFR_RNDN);
  mpfr_set_ui_2exp(tol, 1, -bits - 2, MPFR_RNDN);
  mpfr_set_inf(prev, 1);
  for (long i = 1; i <= 4 * bits + 64; ++i) {
    Rational b = bernoulli(static_cast<unsigned>(2 * i));
    mpfr_mul_q(T, F, b.get_mpq_t(), MPFR_RNDN);
    mpfr_abs(absT, T, MPFR_RNDN);
    if (mpfr_cmp(absT, prev) >= 0) return false;
    mpfr_add(out, out, T, MPFR_RNDN);
    if (mpfr_cmp(absT, tol) < 0) return true;
    mpfr_set(prev.get(), absT.get(), MPFR_RNDN);
    mpfr_mul_si(F, F, (s + 2 * i - 1) * (s + 2 * i), MPFR_RNDN);
    mpfr_div_si(F, F, (2 * i + 1) * (2 * i + 2), MPFR_RNDN);
    mpfr_div(F, F, x2, MPFR_RNDN);
  }
  return false;
}

// Number of terms n <= N0 for which sum_{n > N0} n^-s <= 2^(-bits-1), or 0
// when that exceeds the direct-summation limit.
long direct_terms(std::int64_t s, long bits) {
  constexpr long kLimit = 4096;
  double log2n = (static_cast<double>(bits) + 1.0 - std::log2(static_cast<double>(s - 1))) / static_cast<double>(s - 1);
  if (log2n > std::log2(static_cast<double>(kLimit))) return 0;
  return std::max(1L, static_cast<long>(std::ceil(std::exp2(log2n))));
}

}  // namespace

double log2_abs(mpfr_srcptr x) {
  long e = 0;
  double m = mpfr_get_d_2exp(&e, x, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

double log2_abs(const Integer& x) {
  long e = 0;
  double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

void exp_integral_e1(mpfr_ptr out, double x) {
  Scratch t(mpfr_get_prec(out));
  mpfr_set_d(t, -x, MPFR_RNDN);
  mpfr_eint(out, t, MPFR_RNDN);  // Ei(-x) = -E_1(x)
  mpfr_neg(out, out, MPFR_RNDN);
}

void hurwitz_abs(mpfr_ptr out, std::int64_t s, const Rational& a, long bits) {
  if (s < 2) throw UsageError("zeta: s must be >= 2");
  if (a <= 0 || a > 1) throw UsageError("hurwitz_zeta: a must lie in (0, 1]");
  double scale = static_cast<double>(s) * std::log2(1.0 / a.get_d());
  mpfr_set_prec(out, bits + static_cast<long>(std::ceil(scale)) + 48);
  long M = std::max(4L, static_cast<long>(std::ceil(0.12 * static_cast<double>(bits))) + 4);
  for (int attempt = 0; attempt < 24; ++attempt, M *= 2) {
    if (euler_maclaurin(out, s, a, M, bits)) return;
  }
  throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin did not reach the tolerance");
}

void zeta_abs(mpfr_ptr out, std::int64_t s, long bits) {
  if (s < 2) throw UsageError("zeta: s must be >= 2");
  long n0 = direct_terms(s, bits);
  if (n0 == 0) {
    hurwitz_abs(out, s, Rational(1), bits);
    return;
  }
  mpfr_set_prec(out, bits + 32);
  Scratch tmp(bits + 32);
  mpfr_set_zero(out, 1);
  for (long n = n0; n >= 1; --n) {
    mpfr_ui_pow_ui(tmp, static_cast<unsigned long>(n), static_cast<unsigned long>(s), MPFR_RNDN);
    mpfr_ui_div(tmp, 1, tmp, MPFR_RNDN);
    mpfr_add(out, out, tmp, MPFR_RNDN);
  }
}

void partial_zeta_abs(mpfr_ptr out, std::uint64_t m, std::int64_t s, long bits) {
  zeta_abs(out, s, bits + 4);
  if (m == 0) return;
  Scratch f(mpfr_get_prec(out));
  for (auto p : primes_up_to(nth_prime(m))) {
    mpfr_ui_pow_ui(f, p, static_cast<unsigned long>(s), MPFR_RNDN);
    mpfr_ui_div(f, 1, f, MPFR_RNDN);
    mpfr_ui_sub(f, 1, f, MPFR_RNDN);
    mpfr_mul(out, out, f, MPFR_RNDN);
  }
}

}  // namespace detail

namespace {

long working_bits(int digits) { return bits_for_digits(digits + kGuardDigits); }

}  // namespace

BigDecimal zeta(std::int64_t s, int digits) {
  BigDecimal out(working_bits(digits));
  detail::zeta_abs(out.get(), s, working_bits(digits));
  return out;
}

BigDecimal hurwitz_zeta(std::int64_t s, const Rational& a, int digits) {
  BigDecimal out(working_bits(digits));
  // Relative accuracy: the value is at least a^-s.
  long lift = static_cast<long>(std::floor(static_cast<double>(s) * std::log2(1 / a.get_d())));
  detail::hurwitz_abs(out.get(), s, a, std::max(16L, working_bits(digits) - lift));
  return out;
}

BigDecimal partial_zeta(std::uint64_t m, std::int64_t s, int digits) {
  BigDecimal out(working_bits(digits));
  detail::partial_zeta_abs(out.get(), m, s, working_bits(digits));
  return out;
}

}  // namespace wittkit
