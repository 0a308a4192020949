#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wittkit {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// Parses "p/q", "-p", "p" (decimal). The result is canonical (lowest terms,
// positive denominator). Throws UsageError on malformed input or q = 0.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& value);

// Möbius function by trial division. n must be >= 1.
int moebius(std::int64_t n);

// Positive divisors of n in increasing order. n must be >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

Integer binomial(std::uint64_t n, std::uint64_t k);
Integer factorial(std::uint64_t n);

// n! / prod(parts_i!), evaluated as a product of binomials. Throws UsageError
// when the parts do not sum to n.
Integer multinomial(std::uint64_t n, std::span<const std::uint64_t> parts);

// Generalized binomial coefficient C(e, k) for an arbitrary integer e.
Integer binomial_signed(const Integer& e, std::uint64_t k);

// Exact quotient a / b. Throws MathError if b does not divide a; `what`
// names the quantity for the diagnostic.
Integer exact_div(const Integer& a, const Integer& b, const char* what);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// The m-th prime, nth_prime(1) == 2. m must be >= 1.
std::uint64_t nth_prime(std::uint64_t m);

// Exact Bernoulli number B_k with B_1 = -1/2. Values are memoized in a
// process-wide cache guarded by a mutex.
Rational bernoulli(unsigned k);

}  // namespace wittkit
