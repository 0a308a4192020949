#include <gtest/gtest.h>

#include "support.hpp"
#include "wittkit/error.hpp"
#include "wittkit/necklace.hpp"
#include "wittkit/product.hpp"
#include "wittkit/witt.hpp"

using namespace wittkit;
using testkit::Gen;

namespace {

TruncatedSeries random_unital(Gen& gen, std::size_t order) {
  auto c = gen.poly(8, -4, 4);
  c[0] = 1;
  return testkit::series(order, c);
}

// prod (1 - z^n)^(-e_n) by repeated multiplication with (1 - z^n)^(-1) or (1 - z^n)
TruncatedSeries naive_product(const std::vector<long>& e, std::size_t order) {
  testkit::Poly p(order + 1);
  p[0] = 1;
  for (std::size_t n = 1; n < e.size(); ++n) {
    for (long t = 0; t < std::abs(e[n]); ++t) {
      if (e[n] > 0) {
        for (std::size_t j = n; j <= order; ++j) p[j] += p[j - n];
      } else {
        for (std::size_t j = order; j >= n; --j) p[j] -= p[j - n];
      }
    }
  }
  return TruncatedSeries(order, p);
}

}  // namespace

TEST(Peel1D, Examples) {
  auto geo2 = ratfun_expand({{1}, {1, -2}}, 12);
  auto e = peel_1d(geo2);
  for (long n = 1; n <= 12; ++n) EXPECT_EQ(e.e(static_cast<std::size_t>(n)), necklace_poly(2, n));

  auto one = peel_1d(TruncatedSeries::constant(1, 6));
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(one.e(n), 0);

  auto lin = peel_1d(TruncatedSeries::from_integers(6, {1, -1}));
  EXPECT_EQ(lin.e(1), -1);
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(lin.e(n), 0);

  EXPECT_THROW(peel_1d(TruncatedSeries::from_integers(4, {2, 1})), UsageError);
  EXPECT_THROW(peel_1d(TruncatedSeries(4, {Rational(1), Rational(1, 2)})), UsageError);
}

TEST(Peel1D, PartitionGeneratingFunction) {
  // partition numbers by the coin-change recurrence
  const std::size_t N = 30;
  std::vector<long> p(N + 1);
  p[0] = 1;
  for (std::size_t part = 1; part <= N; ++part)
    for (std::size_t j = part; j <= N; ++j) p[j] += p[j - part];
  auto e = peel_1d(testkit::series(N, p));
  for (std::size_t n = 1; n <= N; ++n) EXPECT_EQ(e.e(n), 1);
}

TEST(Peel1D, ReconstructMatchesNaiveProduct) {
  Gen gen(201);
  for (int t = 0; t < 40; ++t) {
    std::vector<long> e(13);
    for (std::size_t n = 1; n < e.size(); ++n) e[n] = gen.range(-2, 2);
    Expansion1D exp;
    for (long x : e) exp.exponents.push_back(x);
    exp.exponents[0] = 0;
    EXPECT_EQ(reconstruct_1d(exp, 12), naive_product(e, 12));
    EXPECT_EQ(peel_1d(naive_product(e, 12)).exponents, exp.exponents);
  }
  Expansion1D empty;
  EXPECT_EQ(reconstruct_1d(empty, 5), TruncatedSeries::constant(1, 5));
}

TEST(Peel1D, RoundTripFixedPoint) {
  Gen gen(202);
  for (int t = 0; t < 50; ++t) {
    auto f = random_unital(gen, 24);
    auto e = peel_1d(f);
    EXPECT_EQ(reconstruct_1d(e, 24), f);
    EXPECT_EQ(peel_1d(reconstruct_1d(e, 24)), e);
  }
}

TEST(Peel1D, ReciprocalsOfPositivePolynomialsHaveNonNegativeExponents) {
  Gen gen(203);
  for (int t = 0; t < 30; ++t) {
    std::vector<Integer> den{1};
    long d = gen.range(1, 4);
    for (long j = 1; j <= d; ++j) den.push_back(-gen.range(0, 3));
    auto e = peel_1d(ratfun_expand({{1}, den}, 20));
    for (std::size_t n = 1; n <= 20; ++n) EXPECT_GE(e.e(n), 0);
  }
}

TEST(Peel2D, Examples) {
  BiSeries F = BiSeries::one(3, 3);
  F.at(1, 1) = -1;
  auto e = peel_2d(F);
  for (std::size_t j = 0; j <= 3; ++j)
    for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(e.e(j, k), (j == 1 && k == 1) ? 1 : 0);

  auto G = one_minus_y_times(TruncatedSeries::from_integers(10, {1, 1}), 10, 10);
  auto eg = peel_2d(G);
  for (std::size_t j = 0; j <= 10; ++j)
    for (std::size_t k = 1; k <= 10; ++k) {
      Integer want = j <= k ? necklace_count(Composition{j, k - j}) : Integer(0);
      EXPECT_EQ(eg.e(j, k), want) << j << "," << k;
    }

  BiSeries bad(2, 2);
  EXPECT_THROW(peel_2d(bad), UsageError);
}

TEST(Peel2D, BridgeToWittTable) {
  Gen gen(204);
  for (int t = 0; t < 8; ++t) {
    auto c = gen.poly(5, -3, 3);
    c[0] = 0;
    auto f = testkit::series(10, c);
    auto e = peel_2d(one_minus_y_times(f, 10, 10));
    auto table = witt_table(f, 10);
    for (std::size_t j = 0; j <= 10; ++j)
      for (long k = 1; k <= 10; ++k) EXPECT_EQ(Rational(e.e(j, static_cast<std::size_t>(k))), table.at(j, k));
  }
}

TEST(Peel2D, OrderIndependenceAndRoundTrip) {
  Gen gen(205);
  for (int t = 0; t < 20; ++t) {
    BiSeries F = BiSeries::one(6, 5);
    for (std::size_t j = 0; j <= 6; ++j)
      for (std::size_t k = 0; k <= 5; ++k)
        if (j + k > 0) F.at(j, k) = gen.range(-3, 3);
    auto a = peel_2d(F, PeelOrder::kKMajor);
    auto b = peel_2d(F, PeelOrder::kJMajor);
    EXPECT_EQ(a, b);
    EXPECT_EQ(reconstruct_2d(a, 6, 5), F);
  }
}

TEST(Cyclotomic, Checks) {
  EXPECT_TRUE(cyclotomic_check(TruncatedSeries::constant(2, 8), 0, 8).pass);
  EXPECT_TRUE(cyclotomic_check(TruncatedSeries(8), 8, 8).pass);
  auto rep = cyclotomic_check(TruncatedSeries::from_integers(8, {1, 1}), 8, 8);
  EXPECT_TRUE(rep.pass);
  // 1 / (1 - y (1 + z)) has binomial coefficients
  for (std::size_t j = 0; j <= 8; ++j)
    for (std::size_t k = 0; k <= 8; ++k) EXPECT_EQ(rep.lhs.at(j, k), j <= k ? binomial(k, j) : Integer(0));
  EXPECT_THROW(cyclotomic_check(TruncatedSeries::from_integers(4, {1, 1}), 8, 8), UsageError);
  EXPECT_THROW(cyclotomic_check(TruncatedSeries(8, {Rational(1, 2)}), 4, 4), UsageError);
}
