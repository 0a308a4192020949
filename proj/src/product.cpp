#include "wittkit/product.hpp"

#include "int_series.hpp"
#include "wittkit/error.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

namespace {

// F *= (1 - z^j y^k)^e, truncated to the grid of F.
void mul_factor_2d(BiSeries& F, std::size_t j, std::size_t k, const Integer& e) {
  if (e == 0) return;
  const std::size_t J = F.max_j(), K = F.max_k();
  std::size_t tmax = std::min(j == 0 ? SIZE_MAX : J / j, k == 0 ? SIZE_MAX : K / k);
  if (tmax == 0) return;
  std::vector<Integer> c(tmax + 1);
  c[0] = 1;
  for (std::size_t t = 1; t <= tmax; ++t) {
    Integer num = c[t - 1] * (e - static_cast<long>(t - 1));
    mpz_divexact_ui(c[t].get_mpz_t(), num.get_mpz_t(), t);
    c[t] = -c[t];
  }
  for (std::size_t a = J + 1; a-- > 0;) {
    for (std::size_t b = K + 1; b-- > 0;) {
      for (std::size_t t = 1; t <= tmax && t * j <= a && t * k <= b; ++t) {
        const Integer& src = F.at(a - t * j, b - t * k);
        if (c[t] == 0 || src == 0) continue;
        mpz_addmul(F.at(a, b).get_mpz_t(), c[t].get_mpz_t(), src.get_mpz_t());
      }
    }
  }
}

}  // namespace

BiSeries BiSeries::one(std::size_t J, std::size_t K) {
  BiSeries out(J, K);
  out.at(0, 0) = 1;
  return out;
}

Expansion1D peel_1d(const TruncatedSeries& f) {
  if (!f.is_integral()) throw UsageError("peel_1d: coefficients must be integers");
  if (f[0] != 1) throw UsageError("peel_1d: series must be unital, f(0) = " + to_string(f[0]));
  detail::IntPoly residual = f.integer_coeffs();
  Expansion1D out{std::vector<Integer>(residual.size())};
  for (std::size_t n = 1; n < residual.size(); ++n) {
    out.exponents[n] = residual[n];
    detail::mul_binomial_factor(residual, n, out.exponents[n]);
  }
  return out;
}

TruncatedSeries reconstruct_1d(const Expansion1D& e, std::size_t order) {
  detail::IntPoly acc(order + 1);
  acc[0] = 1;
  for (std::size_t n = 1; n <= std::min(order, e.order()); ++n) {
    detail::mul_binomial_factor(acc, n, -e.exponents[n]);
  }
  return TruncatedSeries::from_integers(order, acc);
}

Expansion2D peel_2d(const BiSeries& F, PeelOrder order) {
  if (F.at(0, 0) != 1) throw UsageError("peel_2d: series must be unital, F(0,0) = " + to_string(F.at(0, 0)));
  const std::size_t J = F.max_j(), K = F.max_k();
  BiSeries residual = F;
  Expansion2D out{BiSeries(J, K)};
  auto step = [&](std::size_t j, std::size_t k) {
    if (j == 0 && k == 0) return;
    Integer c = residual.at(j, k);
    if (c == 0) return;
    out.exponents.at(j, k) = -c;
    mul_factor_2d(residual, j, k, c);
  };
  if (order == PeelOrder::kKMajor) {
    for (std::size_t k = 0; k <= K; ++k)
      for (std::size_t j = 0; j <= J; ++j) step(j, k);
  } else {
    for (std::size_t j = 0; j <= J; ++j)
      for (std::size_t k = 0; k <= K; ++k) step(j, k);
  }
  return out;
}

BiSeries reconstruct_2d(const Expansion2D& e, std::size_t J, std::size_t K) {
  BiSeries acc = BiSeries::one(J, K);
  const std::size_t ej = std::min(J, e.exponents.max_j()), ek = std::min(K, e.exponents.max_k());
  for (std::size_t k = 0; k <= ek; ++k) {
    for (std::size_t j = 0; j <= ej; ++j) {
      if (j == 0 && k == 0) continue;
      mul_factor_2d(acc, j, k, e.e(j, k));
    }
  }
  return acc;
}

namespace {

void require_integral_to(const TruncatedSeries& f, std::size_t J) {
  if (!f.is_integral()) throw UsageError("f must have integer coefficients");
  if (f.order() < J) {
    throw UsageError("truncation order " + std::to_string(f.order()) + " of f is below J = " + std::to_string(J));
  }
}

}  // namespace

BiSeries one_minus_y_times(const TruncatedSeries& f, std::size_t J, std::size_t K) {
  require_integral_to(f, J);
  BiSeries out = BiSeries::one(J, K);
  if (K >= 1) {
    for (std::size_t j = 0; j <= J; ++j) out.at(j, 1) = -f[j].get_num();
  }
  return out;
}

CyclotomicReport cyclotomic_check(const TruncatedSeries& f, std::size_t J, std::size_t K) {
  require_integral_to(f, J);
  CyclotomicReport report;
  report.J = J;
  report.K = K;

  // 1/(1 - y f) = sum_k y^k f^k.
  report.lhs = BiSeries(J, K);
  detail::IntPoly fj = f.truncated(J).integer_coeffs();
  detail::IntPoly power(J + 1);
  power[0] = 1;
  for (std::size_t k = 0; k <= K; ++k) {
    for (std::size_t j = 0; j <= J; ++j) report.lhs.at(j, k) = power[j];
    power = detail::mul_trunc(power, fj);
  }

  Expansion2D e{BiSeries(J, K)};
  if (K >= 1) {
    WittTable table = witt_table(f.truncated(J), static_cast<std::int64_t>(K));
    for (std::size_t k = 1; k <= K; ++k) {
      for (std::size_t j = 0; j <= J; ++j) {
        e.exponents.at(j, k) = -table.at(j, static_cast<std::int64_t>(k)).get_num();
      }
    }
  }
  report.rhs = reconstruct_2d(e, J, K);
  for (std::size_t k = 0; k <= K && !report.first_difference; ++k) {
    for (std::size_t j = 0; j <= J; ++j) {
      if (report.lhs.at(j, k) != report.rhs.at(j, k)) {
        report.first_difference = std::make_pair(j, k);
        break;
      }
    }
  }
  report.pass = !report.first_difference;
  return report;
}

}  // namespace wittkit
