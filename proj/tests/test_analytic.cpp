#include <gtest/gtest.h>
#include <mpfr.h>

#include <cmath>

#include "support.hpp"
#include "wittkit/analytic.hpp"
#include "wittkit/error.hpp"

using namespace wittkit;

namespace {

// independent reference values straight from MPFR
class Ref {
 public:
  explicit Ref(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Ref() { mpfr_clear(v_); }
  Ref(const Ref&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// log10 of |a - b| relative to |b|
double rel_log10(const BigDecimal& a, mpfr_srcptr b) {
  Ref d(mpfr_get_prec(b) + 64);
  mpfr_sub(d.get(), a.get(), b, MPFR_RNDN);
  if (mpfr_zero_p(d.get())) return -1000;
  mpfr_div(d.get(), d.get(), b, MPFR_RNDN);
  mpfr_abs(d.get(), d.get(), MPFR_RNDN);
  long e = 0;
  double m = mpfr_get_d_2exp(&e, d.get(), MPFR_RNDN);
  return std::log10(m) + static_cast<double>(e) * std::log10(2.0);
}

double abs_log10(const BigDecimal& a, mpfr_srcptr b) {
  Ref d(mpfr_get_prec(b) + 64);
  mpfr_sub(d.get(), a.get(), b, MPFR_RNDN);
  if (mpfr_zero_p(d.get())) return -1000;
  mpfr_abs(d.get(), d.get(), MPFR_RNDN);
  long e = 0;
  double m = mpfr_get_d_2exp(&e, d.get(), MPFR_RNDN);
  return std::log10(m) + static_cast<double>(e) * std::log10(2.0);
}

constexpr mpfr_prec_t kRefBits = 400;

int legendre_euler(long a, long p) {
  long r = 1, b = ((a % p) + p) % p;
  if (b == 0) return 0;
  for (long e = (p - 1) / 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace

TEST(Zeta, AgainstMpfr) {
  for (long s : {2L, 3L, 5L, 10L, 21L, 50L}) {
    for (int digits : {15, 40, 80}) {
      Ref ref(kRefBits);
      mpfr_zeta_ui(ref.get(), static_cast<unsigned long>(s), MPFR_RNDN);
      EXPECT_LT(rel_log10(zeta(s, digits), ref.get()), -digits) << "s=" << s << " D=" << digits;
    }
  }
}

TEST(Zeta, TwoIsPiSquaredOverSix) {
  Ref ref(kRefBits);
  mpfr_const_pi(ref.get(), MPFR_RNDN);
  mpfr_sqr(ref.get(), ref.get(), MPFR_RNDN);
  mpfr_div_ui(ref.get(), ref.get(), 6, MPFR_RNDN);
  for (int digits : {10, 20, 50, 100}) EXPECT_LT(abs_log10(zeta(2, digits), ref.get()), -digits);
  EXPECT_EQ(zeta(2, 10).to_string(10), "1.644934067");
}

TEST(Zeta, LargeArgumentLeadingTerm) {
  // zeta(50) - 1 < 2 * 2^-50
  BigDecimal z = zeta(50, 30);
  Ref t(kRefBits);
  mpfr_sub_ui(t.get(), z.get(), 1, MPFR_RNDN);
  EXPECT_GT(mpfr_sgn(t.get()), 0);
  mpfr_mul_2si(t.get(), t.get(), 49, MPFR_RNDN);
  EXPECT_LT(mpfr_cmp_ui(t.get(), 1), 0);
}

TEST(Zeta, HurwitzRelations) {
  for (long s : {2L, 3L, 7L}) {
    Ref ref(kRefBits);
    mpfr_zeta_ui(ref.get(), static_cast<unsigned long>(s), MPFR_RNDN);
    EXPECT_LT(rel_log10(hurwitz_zeta(s, 1, 30), ref.get()), -30);
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    mpfr_mul_ui(ref.get(), ref.get(), (1UL << s) - 1, MPFR_RNDN);
    EXPECT_LT(rel_log10(hurwitz_zeta(s, Rational(1, 2), 30), ref.get()), -30);
  }
  // zeta(s,1/3) + zeta(s,2/3) = (3^s - 1) zeta(s)
  BigDecimal a = hurwitz_zeta(3, Rational(1, 3), 25), b = hurwitz_zeta(3, Rational(2, 3), 25);
  Ref sum(kRefBits), ref(kRefBits);
  mpfr_add(sum.get(), a.get(), b.get(), MPFR_RNDN);
  mpfr_zeta_ui(ref.get(), 3, MPFR_RNDN);
  mpfr_mul_ui(ref.get(), ref.get(), 26, MPFR_RNDN);
  mpfr_sub(sum.get(), sum.get(), ref.get(), MPFR_RNDN);
  mpfr_div(sum.get(), sum.get(), ref.get(), MPFR_RNDN);
  EXPECT_LT(std::fabs(mpfr_get_d(sum.get(), MPFR_RNDN)), 1e-24);

  EXPECT_THROW(hurwitz_zeta(2, 0, 10), UsageError);
  EXPECT_THROW(hurwitz_zeta(2, Rational(3, 2), 10), UsageError);
  EXPECT_THROW(zeta(1, 10), UsageError);
}

TEST(Zeta, PartialZeta) {
  Ref ref(kRefBits);
  mpfr_const_pi(ref.get(), MPFR_RNDN);
  mpfr_sqr(ref.get(), ref.get(), MPFR_RNDN);
  mpfr_div_ui(ref.get(), ref.get(), 8, MPFR_RNDN);
  EXPECT_LT(rel_log10(partial_zeta(1, 2, 30), ref.get()), -30);
  // zeta_2(2) = (1 - 1/4)(1 - 1/9) zeta(2) = (8/9) pi^2 / 8 = pi^2 / 9
  mpfr_mul_ui(ref.get(), ref.get(), 8, MPFR_RNDN);
  mpfr_div_ui(ref.get(), ref.get(), 9, MPFR_RNDN);
  EXPECT_LT(rel_log10(partial_zeta(2, 2, 30), ref.get()), -30);
  mpfr_zeta_ui(ref.get(), 5, MPFR_RNDN);
  EXPECT_LT(rel_log10(partial_zeta(0, 5, 30), ref.get()), -30);
}

TEST(Characters, KroneckerMatchesEulerCriterion) {
  for (long p : {3L, 5L, 7L, 11L, 13L, 101L})
    for (long a = -20; a <= 20; ++a) EXPECT_EQ(kronecker_symbol(a, static_cast<std::uint64_t>(p)), legendre_euler(a, p)) << a << "/" << p;
  // (-4/n) is the non-principal character mod 4
  for (long n = 1; n <= 40; ++n) EXPECT_EQ(kronecker_symbol(-4, static_cast<std::uint64_t>(n)), n % 2 == 0 ? 0 : (n % 4 == 1 ? 1 : -1));
}

TEST(Characters, MultiplicativeAndPeriodic) {
  for (long D : {-4L, 5L, -3L, 8L, 12L, -7L}) {
    auto chi = RealCharacter::kronecker(D);
    long q = static_cast<long>(chi.modulus());
    for (long a = 0; a < 60; ++a) {
      EXPECT_EQ(chi(a), chi(a + q));
      EXPECT_EQ(chi(a) == 0, std::gcd(a, q) != 1);
      for (long b = 0; b < 30; ++b) EXPECT_EQ(chi(a * b), chi(a) * chi(b));
    }
    EXPECT_FALSE(chi.is_principal());
    EXPECT_TRUE(chi.power(2).is_principal());
    EXPECT_EQ(chi.power(3).values(), chi.values());
  }
  EXPECT_TRUE(RealCharacter::trivial().is_principal());
  EXPECT_EQ(RealCharacter::trivial().modulus(), 1u);
  EXPECT_THROW(RealCharacter::from_table({0, 1, 1, -1, -1}), UsageError);  // chi(2)^2 != chi(4)
  EXPECT_TRUE(RealCharacter::from_table({0, 1, 1}).is_principal());
  EXPECT_THROW(RealCharacter::from_table({0, 2}), UsageError);
  EXPECT_NO_THROW(RealCharacter::from_table({0, 1, 0, -1}));
}

TEST(LSeries, ClosedForms) {
  Ref ref(kRefBits);
  mpfr_const_catalan(ref.get(), MPFR_RNDN);
  auto chi4 = RealCharacter::kronecker(-4);
  EXPECT_LT(rel_log10(l_series(2, chi4, 40), ref.get()), -40);
  // L(3, chi_-4) = pi^3 / 32
  mpfr_const_pi(ref.get(), MPFR_RNDN);
  mpfr_pow_ui(ref.get(), ref.get(), 3, MPFR_RNDN);
  mpfr_div_ui(ref.get(), ref.get(), 32, MPFR_RNDN);
  EXPECT_LT(rel_log10(l_series(3, chi4, 40), ref.get()), -40);
  // L(2, (5/.)) = 4 pi^2 / (25 sqrt 5)
  Ref root(kRefBits);
  mpfr_const_pi(ref.get(), MPFR_RNDN);
  mpfr_sqr(ref.get(), ref.get(), MPFR_RNDN);
  mpfr_mul_ui(ref.get(), ref.get(), 4, MPFR_RNDN);
  mpfr_sqrt_ui(root.get(), 5, MPFR_RNDN);
  mpfr_mul_ui(root.get(), root.get(), 25, MPFR_RNDN);
  mpfr_div(ref.get(), ref.get(), root.get(), MPFR_RNDN);
  EXPECT_LT(rel_log10(l_series(2, RealCharacter::kronecker(5), 30), ref.get()), -30);
  // principal mod 2 removes the factor at 2
  mpfr_zeta_ui(ref.get(), 3, MPFR_RNDN);
  mpfr_mul_ui(ref.get(), ref.get(), 7, MPFR_RNDN);
  mpfr_div_ui(ref.get(), ref.get(), 8, MPFR_RNDN);
  EXPECT_LT(rel_log10(l_series(3, RealCharacter::principal(2), 30), ref.get()), -30);
  mpfr_zeta_ui(ref.get(), 4, MPFR_RNDN);
  EXPECT_LT(rel_log10(l_series(4, RealCharacter::trivial(), 30), ref.get()), -30);
  EXPECT_EQ(l_series(2, chi4, 10).to_string(10), "0.9159655942");
}

TEST(EulerProduct, Fixtures) {
  // Artin's constant, 0.3739558136...
  auto artin = euler_product({{{1, -1, -1}, {1, -1}}, 0, 12});
  EXPECT_EQ(artin.value.to_string(10), "0.3739558136");

  Ref ref(kRefBits);
  mpfr_const_pi(ref.get(), MPFR_RNDN);
  mpfr_sqr(ref.get(), ref.get(), MPFR_RNDN);
  mpfr_ui_div(ref.get(), 8, ref.get(), MPFR_RNDN);
  auto sq = euler_product({{{1, 0, -1}, {1}}, 1, 30});
  EXPECT_LT(rel_log10(sq.value, ref.get()), -30);

  auto twin = euler_product({{{1, -2}, {1, -2, 1}}, 1, 20});
  EXPECT_EQ(twin.value.to_string(10), "0.6601618158");

  auto one = euler_product({{{1}, {1}}, 0, 20});
  EXPECT_EQ(one.value.to_string(5), "1.0000");

  EXPECT_THROW(euler_product({{{1, 1}, {1}}, 0, 10}), UsageError);  // linear term present
  EXPECT_THROW(euler_product({{{2}, {1}}, 0, 10}), UsageError);
}

TEST(EulerProduct, DirectRouteAgrees) {
  EulerProductSpec spec{{{1, -1, -1}, {1, -1}}, 0, 15};
  auto series = euler_product(spec);
  auto direct = euler_product_direct(spec, 100000);
  EXPECT_LT(std::fabs(series.value.to_double() - direct.value.to_double()),
            series.error.to_double() + direct.error.to_double());
  auto trivial = euler_product_direct({{{1}, {1}}, 0, 10}, 1000);
  EXPECT_EQ(trivial.value.to_double(), 1.0);
}

TEST(EulerProduct, DivergenceNeedsLargerM) {
  // exponents of 1 - 5z^2 grow like 5^(n/2), faster than zeta(n) - 1 ~ 2^-n decays
  EulerProductSpec spec{{{1, 0, -5}, {1}}, 0, 10};
  EXPECT_THROW(euler_product(spec), ConvergenceError);
  spec.m = 3;
  EXPECT_NO_THROW(euler_product(spec));
}

TEST(BChi, TrivialIsOne) {
  auto res = b_chi(RealCharacter::trivial(), 12);
  EXPECT_EQ(res.lseries.value.to_string(12), "1.00000000000");
}

TEST(BChi, CrossRoute) {
  for (long D : {-4L, 5L}) {
    auto res = b_chi(RealCharacter::kronecker(D), 8, 200000);
    ASSERT_TRUE(res.direct.has_value());
    double a = res.lseries.value.to_double(), b = res.direct->value.to_double();
    EXPECT_LT(std::fabs(a - b) / std::fabs(a), 1e-6) << D;
  }
}

TEST(BChi, DirectProductByHand) {
  // prod_p (1 + (chi(p) - 1) p / ((p^2 - chi(p)) (p - 1))) over p < 2000 for chi_-4
  double prod = 1;
  for (std::uint64_t p : primes_up_to(2000)) {
    double c = p == 2 ? 0 : (p % 4 == 1 ? 1 : -1);
    double x = static_cast<double>(p);
    prod *= 1 + (c - 1) * x / ((x * x - c) * (x - 1));
  }
  auto res = b_chi(RealCharacter::kronecker(-4), 8);
  EXPECT_NEAR(res.lseries.value.to_double(), prod, 2e-4);
}

TEST(Convergence, Examples) {
  auto fib = check_convergence_hypotheses(RationalFunction{{-1}, {1, -1, -1}});
  EXPECT_EQ(fib.status, "precondition-failed");
  ASSERT_TRUE(fib.rho.has_value());
  EXPECT_NEAR(*fib.rho, (std::sqrt(5.0) - 1) / 2, 1e-12);

  auto z = check_convergence_hypotheses(RationalFunction{{0, 1}, {1}});
  EXPECT_TRUE(z.constant_term_zero);
  EXPECT_FALSE(z.rho.has_value());
  EXPECT_NEAR(*z.g_half, 0.5, 1e-15);
  EXPECT_TRUE(z.g_half_ok);

  auto three = check_convergence_hypotheses(RationalFunction{{0, 0, 3}, {1}});
  EXPECT_EQ(three.status, "pass");
  EXPECT_NEAR(*three.g_half, 0.75, 1e-15);
  EXPECT_EQ(three.j0, 2u);

  auto big = check_convergence_hypotheses(RationalFunction{{0, 0, 5}, {1}});
  EXPECT_EQ(big.status, "fail");

  auto trunc = check_convergence_hypotheses(TruncatedSeries::from_integers(10, {0, 0, 1, 1}));
  EXPECT_EQ(trunc.status, "inconclusive");
}
