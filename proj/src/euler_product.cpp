#include <cmath>

#include "analytic_detail.hpp"
#include "wittkit/error.hpp"
#include "wittkit/product.hpp"

namespace wittkit {

namespace {

constexpr double kLog2Of10 = 3.3219280948873623;
constexpr std::size_t kFitWindow = 10;
constexpr std::size_t kMaxExponent = 200000;

void check_spec(const EulerProductSpec& spec) {
  if (spec.digits < 1) throw UsageError("euler_product: digits must be >= 1");
  TruncatedSeries head = ratfun_expand(spec.h, 1);
  if (head[0] != 1 || head[1] != 0) {
    throw PreconditionError("h(z) = 1 + O(z^2)", "expansion starts " + to_string(head[0]) + " + " +
                                                     to_string(head[1]) + " z");
  }
}

// Least-squares slope of log2 t_n against n over the fit window.
double fitted_slope(const std::vector<std::pair<double, double>>& pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(pts.size());
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Evaluates num(x)/den(x) at x = 1/p.
void eval_at_inverse(mpfr_ptr out, const RationalFunction& h, std::uint64_t p) {
  const mpfr_prec_t prec = mpfr_get_prec(out);
  detail::Scratch x(prec), num(prec), den(prec);
  mpfr_set_ui(x, p, MPFR_RNDN);
  mpfr_ui_div(x, 1, x, MPFR_RNDN);
  auto horner = [&](mpfr_ptr acc, const std::vector<Integer>& c) {
    mpfr_set_zero(acc, 1);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      mpfr_mul(acc, acc, x, MPFR_RNDN);
      mpfr_add_z(acc, acc, it->get_mpz_t(), MPFR_RNDN);
    }
  };
  horner(num, h.num);
  horner(den, h.den);
  mpfr_div(out, num, den, MPFR_RNDN);
}

}  // namespace

ProductEstimate euler_product(const EulerProductSpec& spec) {
  check_spec(spec);
  const double eps_log2 = -(spec.digits + kGuardDigits) * kLog2Of10;
  const double tail_target_log2 = -(spec.digits + 2) * kLog2Of10;
  const mpfr_prec_t work = bits_for_digits(spec.digits + kGuardDigits) + 32;

  std::size_t order = 64;
  Expansion1D e = peel_1d(ratfun_expand(spec.h, order));
  detail::Scratch total(work), z(work), lz(work), t(64);
  mpfr_set_zero(total, 1);

  std::vector<std::pair<double, double>> nonzero;  // (n, log2 t_n)
  std::size_t last_nonzero = 1;
  double tail_log2 = -INFINITY;
  std::size_t n = 2;
  for (;; ++n) {
    if (n > kMaxExponent) throw ConvergenceError("euler_product: exponent cap reached; increase m");
    if (n > order) {
      order *= 2;
      e = peel_1d(ratfun_expand(spec.h, order));
    }
    const Integer& en = e.e(n);
    if (en != 0) {
      const double le = detail::log2_abs(en);
      const double nn = static_cast<double>(n);
      const long bits = static_cast<long>(std::ceil(-eps_log2 + 2 + 2 * std::log2(nn) + std::max(0.0, le))) + 8;
      detail::partial_zeta_abs(z, spec.m, static_cast<std::int64_t>(n), bits);
      mpfr_set_prec(lz, mpfr_get_prec(z.get()));
      mpfr_log(lz, z, MPFR_RNDN);
      mpfr_mul_z(lz, lz, en.get_mpz_t(), MPFR_RNDN);
      mpfr_add(total, total, lz, MPFR_RNDN);
      mpfr_sub_ui(t, z, 1, MPFR_RNDN);
      nonzero.emplace_back(nn, le + detail::log2_abs(t));
      last_nonzero = n;
    }
    if (nonzero.size() >= kFitWindow) {
      std::vector<std::pair<double, double>> window(nonzero.end() - kFitWindow, nonzero.end());
      const double slope = fitted_slope(window);
      if (slope >= 0) {
        if (n >= 40) {
          throw ConvergenceError("euler_product: |e_n| (zeta_m(n) - 1) does not decay (fitted ratio 2^" +
                                 std::to_string(slope) + "); increase m");
        }
        continue;
      }
      double base = -INFINITY;
      for (const auto& [x, y] : window) base = std::max(base, y + slope * (static_cast<double>(n + 1) - x));
      tail_log2 = base - std::log2(1 - std::exp2(slope)) + 1;
      if (tail_log2 < tail_target_log2) break;
    } else if (n >= 40 && n - last_nonzero >= 30) {
      // Exponents have vanished for a long stretch; treat the tail as empty.
      tail_log2 = -INFINITY;
      break;
    }
  }

  ProductEstimate out{BigDecimal(work), BigDecimal(64), n, true};
  mpfr_exp(out.value.get(), total, MPFR_RNDN);
  // |value| * (tail + rounding)
  mpfr_set_d(out.error.get(), std::exp2(std::max(tail_log2, -1000.0)) + std::exp2(eps_log2), MPFR_RNDU);
  mpfr_mul(out.error.get(), out.error.get(), out.value.get(), MPFR_RNDU);
  mpfr_abs(out.error.get(), out.error.get(), MPFR_RNDU);
  return out;
}

ProductEstimate euler_product_direct(const EulerProductSpec& spec, std::uint64_t prime_limit) {
  check_spec(spec);
  const std::uint64_t first = nth_prime(spec.m + 1);
  if (prime_limit < first) {
    throw UsageError("euler_product_direct: prime limit must be at least p_{m+1} = " + std::to_string(first));
  }
  const mpfr_prec_t prec = 160;
  ProductEstimate out{BigDecimal(prec), BigDecimal(64), 0, true};
  mpfr_set_ui(out.value.get(), 1, MPFR_RNDN);
  detail::Scratch factor(prec);
  for (auto p : primes_up_to(prime_limit)) {
    if (p < first) continue;
    eval_at_inverse(factor, spec.h, p);
    mpfr_mul(out.value.get(), out.value.get(), factor, MPFR_RNDN);
    ++out.terms;
  }
  // log h(x) = a2 x^2 + a3 x^3 + ...; sum_{p > P} p^-2 ~ E_1(log P).
  TruncatedSeries head = ratfun_expand(spec.h, 3);
  const double a2 = head[2].get_d();
  const double a3 = head[3].get_d();
  const double P = static_cast<double>(prime_limit);
  detail::Scratch e1(prec), corr(prec);
  detail::exp_integral_e1(e1, std::log(P));
  mpfr_mul_d(corr, e1, a2, MPFR_RNDN);
  mpfr_exp(corr, corr, MPFR_RNDN);
  mpfr_mul(out.value.get(), out.value.get(), corr, MPFR_RNDN);
  const double err = 0.1 * std::fabs(a2) * mpfr_get_d(e1, MPFR_RNDU) + (std::fabs(a3) + 1) / (P * P);
  mpfr_set_d(out.error.get(), err, MPFR_RNDU);
  mpfr_mul(out.error.get(), out.error.get(), out.value.get(), MPFR_RNDU);
  mpfr_abs(out.error.get(), out.error.get(), MPFR_RNDU);
  return out;
}

}  // namespace wittkit
