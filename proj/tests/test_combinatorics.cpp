#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "wittkit/error.hpp"
#include "wittkit/necklace.hpp"
#include "wittkit/words.hpp"

using namespace wittkit;
using testkit::Gen;

TEST(Arith, MoebiusMatchesTrialDivision) {
  for (long n = 1; n <= 500; ++n) EXPECT_EQ(moebius(n), testkit::mu(n)) << n;
}

TEST(Arith, DivisorsAreSortedAndComplete) {
  for (long n = 1; n <= 200; ++n) {
    std::vector<std::int64_t> want;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) want.push_back(d);
    EXPECT_EQ(divisors(n), want);
  }
}

TEST(Arith, ParseRationalRoundTrip) {
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("12")), "12");
  EXPECT_THROW(parse_rational("1/0"), UsageError);
  EXPECT_THROW(parse_rational("abc"), UsageError);
  EXPECT_THROW(parse_rational(""), UsageError);
}

TEST(Arith, PrimesAndBernoulli) {
  EXPECT_EQ(primes_up_to(30), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(nth_prime(1), 2u);
  EXPECT_EQ(nth_prime(100), 541u);
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  EXPECT_EQ(bernoulli(3), Rational(0));
}

TEST(Arith, SignedBinomial) {
  // (1 - x)^(-3) = sum C(k+2,2) x^k
  for (unsigned k = 0; k < 10; ++k) {
    Integer s = binomial_signed(Integer(-3), k);
    if (k % 2) s = -s;
    EXPECT_EQ(s, binomial(k + 2, 2));
  }
}

TEST(Series, ArithmeticAgainstNaiveProduct) {
  Gen gen(11);
  for (int t = 0; t < 50; ++t) {
    auto f = testkit::series(12, gen.poly(6, -5, 5));
    auto g = testkit::series(12, gen.poly(6, -5, 5));
    auto want = testkit::poly_mul(testkit::to_poly(f), testkit::to_poly(g), 12);
    EXPECT_EQ(testkit::to_poly(f * g), want);
    EXPECT_EQ(f + g - g, f);
    EXPECT_EQ(ps_pow(f, 3), f * f * f);
  }
}

TEST(Series, ReciprocalInvertsUnits) {
  Gen gen(12);
  for (int t = 0; t < 30; ++t) {
    auto c = gen.poly(5, -4, 4);
    c[0] = gen.range(1, 3);
    auto f = testkit::series(15, c);
    EXPECT_EQ(f * ps_recip(f), TruncatedSeries::constant(1, 15));
  }
  EXPECT_THROW(ps_recip(TruncatedSeries::from_integers(4, {0, 1})), UsageError);
}

TEST(Series, InflateAndShift) {
  auto f = TruncatedSeries::from_integers(6, {1, 2, 3});
  EXPECT_EQ(ps_inflate(f, 2), TruncatedSeries::from_integers(6, {1, 0, 2, 0, 3}));
  EXPECT_EQ(ps_shift(f, 2), TruncatedSeries::from_integers(6, {0, 0, 1, 2, 3}));
  // mixed orders truncate to the smaller one
  EXPECT_EQ(ps_add(f, TruncatedSeries(2)).order(), 2u);
}

TEST(Series, RationalFunctionExpansion) {
  // 1/(1 - z - z^2) gives Fibonacci numbers
  auto s = ratfun_expand({{1}, {1, -1, -1}}, 12);
  long a = 1, b = 1;
  for (std::size_t j = 0; j <= 12; ++j) {
    EXPECT_EQ(s[j], Rational(a));
    long c = a + b;
    a = b;
    b = c;
  }
  EXPECT_THROW(ratfun_expand({{1}, {0, 1}}, 4), UsageError);
}

TEST(Necklace, PolynomialMatchesWordEnumeration) {
  for (int alpha = 1; alpha <= 4; ++alpha)
    for (int n = 1; n <= 8; ++n)
      EXPECT_EQ(necklace_poly(alpha, n), Integer(testkit::necklace_alpha_oracle(alpha, n))) << alpha << " " << n;
}

TEST(Necklace, KnownValues) {
  EXPECT_EQ(necklace_poly(2, 6), 9);
  EXPECT_EQ(necklace_poly(0, 5), 0);
  EXPECT_EQ(necklace_poly(1, 1), 1);
  EXPECT_EQ(necklace_poly(1, 4), 0);
  // M(-1; 2) = (1 - (-1)) / 2 = 1
  EXPECT_EQ(necklace_poly(-1, 2), 1);
  EXPECT_THROW(necklace_poly(2, 0), UsageError);
}

TEST(Necklace, CountMatchesPermutationOracle) {
  Gen gen(21);
  for (int t = 0; t < 150; ++t) {
    int letters = static_cast<int>(gen.range(1, 4));
    std::vector<int> content;
    std::vector<std::uint64_t> parts;
    int total = 0;
    for (int i = 0; i < letters; ++i) {
      int c = static_cast<int>(gen.range(0, 3));
      if (total + c > 9) c = 0;
      total += c;
      content.push_back(c);
      parts.push_back(static_cast<std::uint64_t>(c));
    }
    if (total == 0) continue;
    EXPECT_EQ(necklace_count(Composition(parts)), Integer(testkit::necklace_oracle(content)))
        << Composition(parts).to_string();
  }
}

TEST(Necklace, SumOverContentsGivesPolynomial) {
  // sum over contents of length n with 3 letters equals M(3;n)
  for (std::uint64_t n = 1; n <= 7; ++n) {
    Integer sum = 0;
    for (std::uint64_t a = 0; a <= n; ++a)
      for (std::uint64_t b = 0; a + b <= n; ++b) sum += necklace_count(Composition{a, b, n - a - b});
    EXPECT_EQ(sum, necklace_poly(3, static_cast<long>(n)));
  }
}

TEST(Necklace, ClosedFormsMatchCounts) {
  for (std::uint64_t m = 1; m <= 30; ++m) {
    EXPECT_EQ(necklace_closed(m, ClosedForm::kZeroM), necklace_count(Composition{0, m}));
    EXPECT_EQ(necklace_closed(m, ClosedForm::kOneM), necklace_count(Composition{1, m}));
    EXPECT_EQ(necklace_closed(m, ClosedForm::kTwoM), necklace_count(Composition{2, m}));
  }
  // M(1, m) = 1 and M(2, m) = floor((m + 1) / 2)
  for (std::uint64_t m = 1; m <= 20; ++m) {
    EXPECT_EQ(necklace_count(Composition{1, m}), 1);
    EXPECT_EQ(necklace_count(Composition{2, m}), Integer(static_cast<long>((m + 1) / 2)));
  }
}

TEST(Necklace, VCountDiffersOnlyOnHalfContent) {
  // V_k equals M unless the first k parts add up to 2 mod 4
  Gen gen(22);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::uint64_t> parts;
    int letters = static_cast<int>(gen.range(1, 3));
    for (int i = 0; i < letters; ++i) parts.push_back(static_cast<std::uint64_t>(gen.range(1, 4)));
    Composition c(parts);
    for (std::size_t k = 1; k <= parts.size(); ++k) {
      std::uint64_t t_k = 0;
      for (std::size_t i = 0; i < k; ++i) t_k += parts[i];
      if (t_k % 4 != 2) EXPECT_EQ(v_count(c, k), necklace_count(c)) << c.to_string() << " k=" << k;
    }
  }
  EXPECT_EQ(v_count(Composition{2, 2}, 1), 2);
  EXPECT_EQ(necklace_count(Composition{2, 2}), 1);
}

TEST(Necklace, ParseComposition) {
  EXPECT_EQ(parse_composition("2,3,1"), (Composition{2, 3, 1}));
  EXPECT_THROW(parse_composition("2,x"), UsageError);
  EXPECT_THROW(parse_composition(""), UsageError);
}

TEST(Words, LyndonListsAreLyndonAndDistinct) {
  Gen gen(31);
  for (int t = 0; t < 60; ++t) {
    std::vector<std::uint64_t> parts;
    std::vector<int> content;
    int letters = static_cast<int>(gen.range(1, 3));
    for (int i = 0; i < letters; ++i) {
      parts.push_back(static_cast<std::uint64_t>(gen.range(0, 3)));
      content.push_back(static_cast<int>(parts.back()));
    }
    Composition c(parts);
    if (c.total() == 0) continue;
    auto words = lyndon_words(c);
    std::set<Word> unique(words.begin(), words.end());
    EXPECT_EQ(unique.size(), words.size());
    for (const auto& w : words) {
      EXPECT_TRUE(is_lyndon(w));
      std::vector<std::uint64_t> seen(parts.size());
      for (int x : w) ++seen.at(static_cast<std::size_t>(x - 1));  // letters are 1-based
      EXPECT_EQ(seen, parts);
    }
    EXPECT_EQ(static_cast<long>(words.size()), testkit::necklace_oracle(content));
    EXPECT_EQ(aperiodic_count(c), Integer(testkit::necklace_oracle(content)));
    if (c.total() <= 8) EXPECT_EQ(lyndon_words_naive(c), words);
  }
}

TEST(Words, PeriodAndLyndonPredicate) {
  EXPECT_EQ(minimal_period({1, 2, 1, 2}), 2u);
  EXPECT_EQ(minimal_period({1, 1, 2}), 3u);
  EXPECT_TRUE(is_lyndon({1, 1, 2}));
  EXPECT_FALSE(is_lyndon({1, 2, 1}));
  EXPECT_FALSE(is_lyndon({1, 2, 1, 2}));
}

TEST(Words, DuvalEnumerationCountsByLength) {
  // Lyndon words of length n over alpha letters number M(alpha; n)
  for (int alpha = 2; alpha <= 3; ++alpha) {
    std::vector<long> by_len(9);
    for_each_lyndon_word(8, alpha, [&](const Word& w) { ++by_len[w.size()]; });
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(Integer(by_len[static_cast<std::size_t>(n)]), necklace_poly(alpha, n));
  }
}

TEST(Words, BudgetIsEnforced) {
  EXPECT_THROW(lyndon_words(Composition{10, 10}, 14), ResourceError);
  EXPECT_THROW(aperiodic_count(Composition{10, 10}, 14), ResourceError);
}
