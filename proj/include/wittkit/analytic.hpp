#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittkit/bigdecimal.hpp"
#include "wittkit/series.hpp"

namespace wittkit {

// Riemann and Hurwitz zeta for integer s >= 2, a in (0, 1]. The returned value
// carries `digits` + kGuardDigits digits of precision.
BigDecimal zeta(std::int64_t s, int digits);
BigDecimal hurwitz_zeta(std::int64_t s, const Rational& a, int digits);

// zeta(s) with the Euler factors of the first m primes removed.
BigDecimal partial_zeta(std::uint64_t m, std::int64_t s, int digits);

// A real Dirichlet character given by its values on 0..q-1.
class RealCharacter {
 public:
  // The character mod 1 (chi(n) = 1 for all n).
  static RealCharacter trivial();
  static RealCharacter principal(std::uint64_t q);
  // n -> (D/n), a character mod |D|. Needs D = 0 or 1 mod 4 and D != 0.
  static RealCharacter kronecker(std::int64_t D);
  // Validates range, chi(1) = 1, chi(a) = 0 iff gcd(a, q) > 1 and complete
  // multiplicativity. Throws UsageError otherwise.
  static RealCharacter from_table(std::vector<int> values);

  std::uint64_t modulus() const noexcept { return values_.size(); }
  int operator()(std::int64_t n) const;
  const std::vector<int>& values() const noexcept { return values_; }
  bool is_principal() const;
  // chi^k: chi for odd k, the principal character mod q for even k.
  RealCharacter power(std::int64_t k) const;
  const std::string& label() const noexcept { return label_; }

 private:
  RealCharacter(std::vector<int> values, std::string label) : values_(std::move(values)), label_(std::move(label)) {}
  std::vector<int> values_;
  std::string label_;
};

// Kronecker symbol (a/n) for n >= 0.
int kronecker_symbol(std::int64_t a, std::uint64_t n);

// L(s, chi) = sum chi(n) n^-s, s >= 2.
BigDecimal l_series(std::int64_t s, const RealCharacter& chi, int digits);

// prod_{p > p_m} h(1/p) for h = 1 + O(z^2) with integer coefficients.
struct EulerProductSpec {
  RationalFunction h;
  std::uint64_t m = 0;
  int digits = 20;
};

struct ProductEstimate {
  BigDecimal value;
  BigDecimal error{64};  // estimated absolute error
  std::size_t terms = 0;  // exponents used, or primes multiplied
  bool heuristic = true;
};

// prod_{n >= 2} zeta_m(n)^{e_n} with h = prod (1 - z^n)^{-e_n}. The tail is
// extrapolated geometrically from the last ten nonzero |e_n| (zeta_m(n) - 1);
// ConvergenceError when those terms do not decay (m too small).
ProductEstimate euler_product(const EulerProductSpec& spec);

// prod_{p_m < p <= P} h(1/p) with a first-order correction for p > P.
ProductEstimate euler_product_direct(const EulerProductSpec& spec, std::uint64_t prime_limit);

struct BChiResult {
  ProductEstimate lseries;
  std::optional<ProductEstimate> direct;
  std::int64_t rows = 0;     // r range of the double product
  std::size_t columns = 0;   // j - 3r range
  std::size_t factors = 0;   // L-values actually multiplied
};

// B_chi = prod_p (1 + (chi(p) - 1) p / ((p^2 - chi(p))(p - 1))) through the
// Artin constant and L-series, optionally cross-checked by the direct product
// over p <= cross_check_limit.
BChiResult b_chi(const RealCharacter& chi, int digits, std::optional<std::uint64_t> cross_check_limit = std::nullopt);

struct ConvergenceReport {
  bool constant_term_zero = false;
  std::size_t j0 = 0;                // first j >= 1 with a(j) != 0; 0 if none
  std::optional<double> rho;         // radius of convergence; nullopt = infinite
  bool rho_exact = false;            // from denominator roots
  std::optional<double> g_half;      // sum_{j>=1} |a(j)| 2^-j; nullopt = divergent
  bool rho_ok = false;               // rho > 1/2
  bool g_half_ok = false;            // g(1/2) < 1
  bool prime_sum_ok = false;         // sum_p g(1/p) converges
  std::string status;                // pass, fail, inconclusive, precondition-failed
  std::vector<std::string> notes;
};

ConvergenceReport check_convergence_hypotheses(const RationalFunction& f);
// Estimates from the stored coefficients only; the radius is reported as
// inconclusive.
ConvergenceReport check_convergence_hypotheses(const TruncatedSeries& f);

}  // namespace wittkit
