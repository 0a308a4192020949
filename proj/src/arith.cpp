#include "wittkit/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "wittkit/error.hpp"

namespace wittkit {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(const std::string& text) {
  auto valid = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
    throw UsageError("malformed rational literal '" + text + "'");
  }
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw UsageError("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

int moebius(std::int64_t n) {
  if (n < 1) throw UsageError("moebius: n must be >= 1, got " + std::to_string(n));
  int result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw UsageError("divisors: n must be >= 1, got " + std::to_string(n));
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(std::uint64_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer multinomial(std::uint64_t n, std::span<const std::uint64_t> parts) {
  std::uint64_t sum = 0;
  for (auto p : parts) sum += p;
  if (sum != n) {
    throw UsageError("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                     std::to_string(n));
  }
  Integer result = 1;
  std::uint64_t running = 0;
  for (auto p : parts) {
    running += p;
    result *= binomial(running, p);
  }
  return result;
}

Integer binomial_signed(const Integer& e, std::uint64_t k) {
  Integer num = 1;
  Integer term = e;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= term;
    term -= 1;
  }
  Integer result;
  mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), factorial(k).get_mpz_t());
  return result;
}

Integer exact_div(const Integer& a, const Integer& b, const char* what) {
  if (b == 0) throw MathError(std::string(what) + ": division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw MathError(std::string(what) + ": " + a.get_str() + " is not divisible by " +
                    b.get_str());
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t nth_prime(std::uint64_t m) {
  if (m < 1) throw UsageError("nth_prime: m must be >= 1");
  // p_m < m (ln m + ln ln m) for m >= 6.
  double x = static_cast<double>(m);
  std::uint64_t bound = m < 6 ? 15 : static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
  auto primes = primes_up_to(bound);
  return primes.at(m - 1);
}

namespace {

struct BernoulliCache {
  std::mutex mutex;
  std::vector<Rational> values{Rational(1)};
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

Rational bernoulli(unsigned k) {
  auto& cache = bernoulli_cache();
  std::lock_guard lock(cache.mutex);
  auto& b = cache.values;
  while (b.size() <= k) {
    unsigned n = static_cast<unsigned>(b.size());
    if (n >= 3 && n % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    Rational acc = 0;
    for (unsigned j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      acc += Rational(binomial(n + 1, j)) * b[j];
    }
    Rational bn = -acc / Rational(n + 1);
    bn.canonicalize();
    b.push_back(bn);
  }
  return b[k];
}

}  // namespace wittkit
