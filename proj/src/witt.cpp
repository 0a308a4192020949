#include "wittkit/witt.hpp"

#include <algorithm>

#include "int_series.hpp"
#include "wittkit/error.hpp"
#include "wittkit/parallel.hpp"

namespace wittkit {

namespace {

using detail::IntPoly;

Integer ipow(const Integer& base, std::int64_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

// Assembles (1/r) sum_{d|r} mu(d) f(z^d)^(r/d) from numerators powers[k] of
// f^k (common denominator den^k). powers[k] must exist for every k | r.
TruncatedSeries assemble_row(const std::vector<IntPoly>& powers, const Integer& den, std::int64_t r,
                             bool integral) {
  const std::size_t len = powers[1].size();
  IntPoly acc(len);
  for (auto d : divisors(r)) {
    int mu = moebius(d);
    if (mu == 0) continue;
    IntPoly term = detail::inflate(powers[static_cast<std::size_t>(r / d)], d);
    // Bring den^(r/d) up to den^r.
    Integer lift = ipow(den, r - r / d);
    for (std::size_t j = 0; j < len; ++j) {
      if (term[j] == 0) continue;
      if (mu > 0) mpz_addmul(acc[j].get_mpz_t(), term[j].get_mpz_t(), lift.get_mpz_t());
      else mpz_submul(acc[j].get_mpz_t(), term[j].get_mpz_t(), lift.get_mpz_t());
    }
  }
  if (integral) {
    std::vector<Rational> coeffs(len);
    const Integer rr(static_cast<long>(r));
    for (std::size_t j = 0; j < len; ++j) {
      if (!mpz_divisible_p(acc[j].get_mpz_t(), rr.get_mpz_t())) {
        throw MathError("Witt transform of an integral series lost integrality at z^" +
                        std::to_string(j) + " (r = " + std::to_string(r) + ")");
      }
      Integer q;
      mpz_divexact(q.get_mpz_t(), acc[j].get_mpz_t(), rr.get_mpz_t());
      coeffs[j] = Rational(q);
    }
    return TruncatedSeries(len - 1, std::move(coeffs));
  }
  return detail::from_scaled(acc, ipow(den, r) * r);
}

}  // namespace

TruncatedSeries witt_transform(const TruncatedSeries& f, std::int64_t r) {
  if (r < 1) throw UsageError("witt_transform: r must be >= 1");
  const bool integral = f.is_integral();
  auto scaled = detail::to_scaled(f, f.order());
  std::vector<IntPoly> powers(static_cast<std::size_t>(r) + 1);
  powers[1] = scaled.values;
  for (auto d : divisors(r)) {
    auto k = static_cast<std::size_t>(r / d);
    if (powers[k].empty()) powers[k] = detail::pow_trunc(scaled.values, r / d);
  }
  return assemble_row(powers, scaled.den, r, integral);
}

bool WittTable::integral() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const TruncatedSeries& s) { return s.is_integral(); });
}

WittTable::WittTable(TruncatedSeries f, std::vector<TruncatedSeries> rows)
    : f_(std::move(f)), rows_(std::move(rows)) {}

WittTable witt_table(const TruncatedSeries& f, std::int64_t R, std::optional<std::size_t> J) {
  if (R < 1) throw UsageError("witt_table: R must be >= 1");
  std::size_t degree = J.value_or(f.order());
  if (degree > f.order()) {
    throw UsageError("witt_table: J = " + std::to_string(degree) + " exceeds the truncation order " +
                     std::to_string(f.order()) + " of f");
  }
  TruncatedSeries base = f.truncated(degree);
  const bool integral = base.is_integral();
  auto scaled = detail::to_scaled(base, degree);
  std::vector<IntPoly> powers(static_cast<std::size_t>(R) + 1);
  powers[1] = scaled.values;
  for (std::size_t k = 2; k <= static_cast<std::size_t>(R); ++k) {
    powers[k] = detail::mul_trunc(powers[k - 1], scaled.values);
  }
  std::vector<TruncatedSeries> rows(static_cast<std::size_t>(R));
  parallel_for(rows.size(), [&](std::size_t i) {
    rows[i] = assemble_row(powers, scaled.den, static_cast<std::int64_t>(i + 1), integral);
  });
  return WittTable(std::move(base), std::move(rows));
}

namespace {

SeriesSequence divisor_transform(const SeriesSequence& in, bool with_moebius) {
  SeriesSequence out;
  out.reserve(in.size());
  for (std::size_t idx = 0; idx < in.size(); ++idx) {
    auto r = static_cast<std::int64_t>(idx + 1);
    TruncatedSeries acc(in[idx].order());
    for (auto d : divisors(r)) {
      int mu = with_moebius ? moebius(d) : 1;
      if (mu == 0) continue;
      TruncatedSeries term = ps_inflate(in[static_cast<std::size_t>(r / d - 1)], d);
      acc = mu > 0 ? ps_add(acc, term) : ps_sub(acc, term);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

SeriesSequence moebius_invert_series(const SeriesSequence& a) { return divisor_transform(a, true); }

SeriesSequence divisor_sum_series(const SeriesSequence& b) { return divisor_transform(b, false); }

}  // namespace wittkit
