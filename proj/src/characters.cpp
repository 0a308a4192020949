#include <cmath>
#include <numeric>

#include "analytic_detail.hpp"
#include "wittkit/error.hpp"

namespace wittkit {

int kronecker_symbol(std::int64_t a, std::uint64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int v = 0;
    while (n % 2 == 0) {
      n /= 2;
      ++v;
    }
    std::int64_t r = ((a % 8) + 8) % 8;
    if (v % 2 == 1 && (r == 3 || r == 5)) result = -result;
  }
  // Jacobi symbol (a / n) for odd n.
  auto m = static_cast<std::int64_t>(n);
  std::int64_t x = ((a % m) + m) % m;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      if (m % 8 == 3 || m % 8 == 5) result = -result;
    }
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

RealCharacter RealCharacter::trivial() { return RealCharacter({1}, "trivial"); }

RealCharacter RealCharacter::principal(std::uint64_t q) {
  if (q < 1) throw UsageError("character modulus must be >= 1");
  if (q == 1) return trivial();
  std::vector<int> values(q);
  for (std::uint64_t a = 0; a < q; ++a) values[a] = std::gcd(a, q) == 1 ? 1 : 0;
  return RealCharacter(std::move(values), "principal mod " + std::to_string(q));
}

RealCharacter RealCharacter::kronecker(std::int64_t D) {
  std::int64_t r = ((D % 4) + 4) % 4;
  if (D == 0 || (r != 0 && r != 1)) {
    throw UsageError("kronecker: D must be nonzero and congruent to 0 or 1 mod 4, got " + std::to_string(D));
  }
  auto q = static_cast<std::uint64_t>(D < 0 ? -D : D);
  if (q == 1) return trivial();
  if (q > 100000000) throw ResourceError("kronecker: |D| too large for a value table");
  std::vector<int> values(q);
  for (std::uint64_t a = 0; a < q; ++a) values[a] = kronecker_symbol(D, a);
  return RealCharacter(std::move(values), "kronecker(" + std::to_string(D) + ")");
}

RealCharacter RealCharacter::from_table(std::vector<int> values) {
  const std::uint64_t q = values.size();
  if (q == 0) throw UsageError("character table is empty");
  if (q > 10000) throw ResourceError("character table longer than 10000 entries");
  for (std::uint64_t a = 0; a < q; ++a) {
    int v = values[a];
    if (v < -1 || v > 1) throw UsageError("character values must be -1, 0 or 1");
    if ((v == 0) != (std::gcd(a, q) != 1)) {
      throw UsageError("character must vanish exactly on residues sharing a factor with " + std::to_string(q));
    }
  }
  if (values[1 % q] != 1) throw UsageError("character must satisfy chi(1) = 1");
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = a; b < q; ++b) {
      if (values[(a * b) % q] != values[a] * values[b]) {
        throw UsageError("character is not multiplicative at " + std::to_string(a) + " * " + std::to_string(b));
      }
    }
  }
  return RealCharacter(std::move(values), "table mod " + std::to_string(q));
}

int RealCharacter::operator()(std::int64_t n) const {
  auto q = static_cast<std::int64_t>(values_.size());
  return values_[static_cast<std::size_t>(((n % q) + q) % q)];
}

bool RealCharacter::is_principal() const {
  for (int v : values_) {
    if (v == -1) return false;
  }
  return true;
}

RealCharacter RealCharacter::power(std::int64_t k) const {
  if (k < 1) throw UsageError("character power must be >= 1");
  return k % 2 == 1 ? *this : principal(modulus());
}

namespace detail {

void l_series_abs(mpfr_ptr out, std::int64_t s, const RealCharacter& chi, long bits) {
  if (s < 2) throw UsageError("l_series: s must be >= 2");
  const std::uint64_t q = chi.modulus();
  if (q == 1) {
    zeta_abs(out, s, bits);
    return;
  }
  // Direct summation when the tail sum_{n > N0} n^-s is already negligible.
  double log2n = (static_cast<double>(bits) + 1.0 - std::log2(static_cast<double>(s - 1))) / static_cast<double>(s - 1);
  if (log2n <= 12.0) {
    auto n0 = std::max(1L, static_cast<long>(std::ceil(std::exp2(log2n))));
    mpfr_set_prec(out, bits + 32);
    Scratch tmp(bits + 32);
    mpfr_set_zero(out, 1);
    for (long n = n0; n >= 1; --n) {
      int c = chi(n);
      if (c == 0) continue;
      mpfr_ui_pow_ui(tmp, static_cast<unsigned long>(n), static_cast<unsigned long>(s), MPFR_RNDN);
      mpfr_ui_div(tmp, 1, tmp, MPFR_RNDN);
      if (c > 0) {
        mpfr_add(out, out, tmp, MPFR_RNDN);
      } else {
        mpfr_sub(out, out, tmp, MPFR_RNDN);
      }
    }
    return;
  }
  // L(s, chi) = q^-s sum_a chi(a) zeta(s, a/q).
  const double lq = std::log2(static_cast<double>(q));
  const long hbits = std::max(16L, bits + static_cast<long>(std::ceil(2 * lq)) + 2 -
                                       static_cast<long>(std::floor(static_cast<double>(s) * lq)));
  const mpfr_prec_t prec = bits + 32;
  mpfr_set_prec(out, prec);
  mpfr_set_zero(out, 1);
  Scratch h(prec);
  for (std::uint64_t a = 1; a <= q; ++a) {
    int c = chi(static_cast<std::int64_t>(a));
    if (c == 0) continue;
    hurwitz_abs(h, s, Rational(static_cast<long>(a), static_cast<unsigned long>(q)), hbits);
    if (c > 0) {
      mpfr_add(out, out, h, MPFR_RNDN);
    } else {
      mpfr_sub(out, out, h, MPFR_RNDN);
    }
  }
  Scratch qs(prec);
  mpfr_ui_pow_ui(qs, q, static_cast<unsigned long>(s), MPFR_RNDN);
  mpfr_div(out, out, qs, MPFR_RNDN);
}

}  // namespace detail

BigDecimal l_series(std::int64_t s, const RealCharacter& chi, int digits) {
  long bits = bits_for_digits(digits + kGuardDigits);
  BigDecimal out(bits);
  detail::l_series_abs(out.get(), s, chi, bits);
  return out;
}

}  // namespace wittkit
