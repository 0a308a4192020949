#include <cmath>
#include <map>
#include <mutex>

#include "analytic_detail.hpp"
#include "wittkit/error.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

namespace {

constexpr double kLog2Of10 = 3.3219280948873623;
constexpr std::size_t kMaxColumns = 20000;

// f = -1/(1 - z - z^2). Its coefficients are bounded in absolute value by
// those of G = 1/(1 - z - z^2).
RationalFunction fibonacci_source() { return {{Integer(-1)}, {Integer(1), Integer(-1), Integer(-1)}}; }

double log2_sum_exp2(const std::vector<double>& v) {
  double top = -INFINITY;
  for (double x : v) top = std::max(top, x);
  double acc = 0;
  for (double x : v) acc += std::exp2(x - top);
  return top + std::log2(acc);
}

// log2 of (1/r) sum_{d|r} G(x^d)^{r/d}, which dominates sum_i |m_f(i,r)| x^i.
double log2_row_mass(std::int64_t r, double x) {
  std::vector<double> parts;
  for (auto d : divisors(r)) {
    double xd = std::pow(x, static_cast<double>(d));
    parts.push_back(static_cast<double>(r / d) * -std::log2(1 - xd - xd * xd));
  }
  return log2_sum_exp2(parts) - std::log2(static_cast<double>(r));
}

// Columns i <= N needed in row r so that sum_{i > N} 3 |m_f(i,r)| 2^-(3r+i)
// stays below 2^target. |log L(j, chi)| <= 3 * 2^-j for j >= 4.
std::size_t columns_needed(std::int64_t r, double target) {
  double best = INFINITY;
  for (double x = 0.505; x < 0.6175; x += 0.0025) {
    double head = std::log2(3.0) - 3.0 * static_cast<double>(r) + log2_row_mass(r, x);
    best = std::min(best, std::ceil((head - target) / std::log2(2 * x)));
  }
  if (best > static_cast<double>(kMaxColumns)) throw ConvergenceError("b_chi: column tail does not decay");
  return static_cast<std::size_t>(std::max(1.0, best));
}

struct TableCache {
  std::mutex mu;
  std::optional<WittTable> table;
};

TableCache& table_cache() {
  static TableCache cache;
  return cache;
}

// Shared Witt table of f with at least R rows and N columns.
WittTable fibonacci_table(std::int64_t R, std::size_t N) {
  TableCache& cache = table_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  if (!cache.table || cache.table->max_order() < R || cache.table->max_degree() < N) {
    std::int64_t rows = std::max(R, cache.table ? cache.table->max_order() : 0);
    std::size_t cols = std::max(N, cache.table ? cache.table->max_degree() : 0);
    cache.table = witt_table(ratfun_expand(fibonacci_source(), cols), rows);
  }
  return *cache.table;
}

ProductEstimate direct_route(const RealCharacter& chi, std::uint64_t limit) {
  if (limit < 2) throw UsageError("b_chi: cross-check prime limit must be >= 2");
  const mpfr_prec_t prec = 160;
  ProductEstimate out{BigDecimal(prec), BigDecimal(64), 0, true};
  detail::Scratch x(prec), num(prec), den(prec), tmp(prec);
  mpfr_set_ui(out.value.get(), 1, MPFR_RNDN);
  for (auto p : primes_up_to(limit)) {
    int c = chi(static_cast<std::int64_t>(p));
    ++out.terms;
    if (c == 1) continue;
    // (1 - x - x^2 + c x^3) / ((1 - c x^2)(1 - x)), x = 1/p
    mpfr_set_ui(x, p, MPFR_RNDN);
    mpfr_ui_div(x, 1, x, MPFR_RNDN);
    mpfr_mul_si(num, x, c, MPFR_RNDN);
    mpfr_sub_ui(num, num, 1, MPFR_RNDN);
    mpfr_mul(num, num, x, MPFR_RNDN);
    mpfr_sub_ui(num, num, 1, MPFR_RNDN);
    mpfr_mul(num, num, x, MPFR_RNDN);
    mpfr_add_ui(num, num, 1, MPFR_RNDN);
    mpfr_sqr(tmp, x, MPFR_RNDN);
    mpfr_mul_si(tmp, tmp, c, MPFR_RNDN);
    mpfr_ui_sub(den, 1, tmp, MPFR_RNDN);
    mpfr_ui_sub(tmp, 1, x, MPFR_RNDN);
    mpfr_mul(den, den, tmp, MPFR_RNDN);
    mpfr_div(tmp, num, den, MPFR_RNDN);
    mpfr_mul(out.value.get(), out.value.get(), tmp, MPFR_RNDN);
  }
  // Beyond the limit log(factor) ~ (chi(p) - 1) / p^2; chi(p) averages to 0
  // for a non-principal character and to 1 for a principal one.
  const double mean = chi.is_principal() ? 0.0 : -1.0;
  const double P = static_cast<double>(limit);
  detail::Scratch e1(prec);
  detail::exp_integral_e1(e1, std::log(P));
  mpfr_mul_d(tmp, e1, mean, MPFR_RNDN);
  mpfr_exp(tmp, tmp, MPFR_RNDN);
  mpfr_mul(out.value.get(), out.value.get(), tmp, MPFR_RNDN);
  const double E = mpfr_get_d(e1, MPFR_RNDU);
  const double err = 0.1 * std::fabs(mean) * E + (chi.is_principal() ? 0.0 : 0.1 * E) + 2 / (P * P);
  mpfr_set_d(out.error.get(), err, MPFR_RNDU);
  mpfr_mul(out.error.get(), out.error.get(), out.value.get(), MPFR_RNDU);
  mpfr_abs(out.error.get(), out.error.get(), MPFR_RNDU);
  return out;
}

}  // namespace

BChiResult b_chi(const RealCharacter& chi, int digits, std::optional<std::uint64_t> cross_check_limit) {
  if (digits < 1) throw UsageError("b_chi: digits must be >= 1");
  const double eps_log2 = -(digits + kGuardDigits) * kLog2Of10;
  const double share = eps_log2 - 3;  // each of four error sources gets 1/8
  const mpfr_prec_t work = bits_for_digits(digits + kGuardDigits) + 32;

  std::int64_t R = 1;
  while (std::log2(6.0) - static_cast<double>(R) - std::log2(static_cast<double>(R + 1)) >= share) ++R;
  const double row_target = share - std::log2(static_cast<double>(R));
  std::size_t N = 1;
  for (std::int64_t r = 1; r <= R; ++r) N = std::max(N, columns_needed(r, row_target));
  const double skip_log2 = share - std::log2(static_cast<double>(R) * static_cast<double>(N + 1));

  BChiResult out{ProductEstimate{BigDecimal(work), BigDecimal(64), 0, true}, std::nullopt, R, N, 0};

  EulerProductSpec artin{{{Integer(1), Integer(-1), Integer(-1)}, {Integer(1), Integer(-1)}}, 0,
                         digits + kGuardDigits};
  ProductEstimate A = euler_product(artin);

  detail::Scratch total(work), lv(work), term(work);
  mpfr_log(total, A.value.get(), MPFR_RNDN);
  const long lbits = static_cast<long>(std::ceil(-eps_log2)) + 8;
  auto add_log_l = [&](std::int64_t s, const RealCharacter& c, int sign) {
    detail::l_series_abs(lv, s, c, lbits);
    mpfr_log(lv, lv, MPFR_RNDN);
    if (sign > 0) {
      mpfr_add(total, total, lv, MPFR_RNDN);
    } else {
      mpfr_sub(total, total, lv, MPFR_RNDN);
    }
  };
  const RealCharacter chi2 = chi.power(2);
  add_log_l(2, chi, 1);
  add_log_l(3, chi, 1);
  add_log_l(6, chi2, -1);

  WittTable table = fibonacci_table(R, N);
  std::map<std::pair<std::int64_t, int>, std::pair<long, BigDecimal>> log_l;
  for (std::int64_t r = 1; r <= R; ++r) {
    const RealCharacter& cr = r % 2 == 1 ? chi : chi2;
    for (std::size_t i = 1; i <= N; ++i) {
      const Rational& m = table.at(i, r);
      if (m == 0) continue;
      const std::int64_t j = 3 * r + static_cast<std::int64_t>(i);
      const double lm = detail::log2_abs(m.get_num());
      if (lm + std::log2(3.0) - static_cast<double>(j) < skip_log2) continue;
      const long bits = static_cast<long>(std::ceil(lm - skip_log2)) + 8;
      auto key = std::make_pair(j, static_cast<int>(r % 2));
      auto it = log_l.find(key);
      if (it == log_l.end() || it->second.first < bits) {
        BigDecimal v(bits + 16);
        detail::l_series_abs(v.get(), j, cr, bits + 4);
        mpfr_log(v.get(), v.get(), MPFR_RNDN);
        it = log_l.insert_or_assign(key, std::make_pair(bits, std::move(v))).first;
      }
      mpfr_mul_z(term, it->second.second.get(), m.get_num_mpz_t(), MPFR_RNDN);
      mpfr_sub(total, total, term, MPFR_RNDN);
      ++out.factors;
    }
  }

  mpfr_exp(out.lseries.value.get(), total, MPFR_RNDN);
  out.lseries.terms = out.factors;
  // Four budget shares plus the relative error of A.
  detail::Scratch rel(64);
  mpfr_div(rel, A.error.get(), A.value.get(), MPFR_RNDU);
  mpfr_abs(rel, rel, MPFR_RNDU);
  mpfr_set_d(out.lseries.error.get(), std::exp2(eps_log2 - 1), MPFR_RNDU);
  mpfr_add(out.lseries.error.get(), out.lseries.error.get(), rel, MPFR_RNDU);
  mpfr_mul(out.lseries.error.get(), out.lseries.error.get(), out.lseries.value.get(), MPFR_RNDU);
  mpfr_abs(out.lseries.error.get(), out.lseries.error.get(), MPFR_RNDU);

  if (cross_check_limit) out.direct = direct_route(chi, *cross_check_limit);
  return out;
}

}  // namespace wittkit
