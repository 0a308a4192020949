#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wittkit/series.hpp"

namespace wittkit {

// f = prod_{n >= 1} (1 - z^n)^(-e_n) modulo z^(N+1). exponents[0] is unused
// and kept at zero.
struct Expansion1D {
  std::vector<Integer> exponents;
  std::size_t order() const noexcept { return exponents.empty() ? 0 : exponents.size() - 1; }
  const Integer& e(std::size_t n) const { return exponents.at(n); }
  friend bool operator==(const Expansion1D&, const Expansion1D&) = default;
};

// Dense integer grid c(j, k), 0 <= j <= J, 0 <= k <= K, for a series in z and y.
class BiSeries {
 public:
  BiSeries(std::size_t J, std::size_t K) : J_(J), K_(K), data_((J + 1) * (K + 1)) {}
  static BiSeries one(std::size_t J, std::size_t K);
  std::size_t max_j() const noexcept { return J_; }
  std::size_t max_k() const noexcept { return K_; }
  Integer& at(std::size_t j, std::size_t k) { return data_.at(j * (K_ + 1) + k); }
  const Integer& at(std::size_t j, std::size_t k) const { return data_.at(j * (K_ + 1) + k); }
  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  std::size_t J_, K_;
  std::vector<Integer> data_;
};

// F = prod_{(j,k) != (0,0)} (1 - z^j y^k)^e(j,k) up to bidegree (J, K).
struct Expansion2D {
  BiSeries exponents;
  const Integer& e(std::size_t j, std::size_t k) const { return exponents.at(j, k); }
  friend bool operator==(const Expansion2D&, const Expansion2D&) = default;
};

// kKMajor visits (j, k) by increasing k, then j; kJMajor swaps the roles.
enum class PeelOrder { kKMajor, kJMajor };

// Requires f(0) = 1 and integer coefficients (UsageError otherwise).
Expansion1D peel_1d(const TruncatedSeries& f);
TruncatedSeries reconstruct_1d(const Expansion1D& e, std::size_t order);

// Requires F(0,0) = 1.
Expansion2D peel_2d(const BiSeries& F, PeelOrder order = PeelOrder::kKMajor);
BiSeries reconstruct_2d(const Expansion2D& e, std::size_t J, std::size_t K);

// 1 - y f(z) up to bidegree (J, K); f must be integral with order >= J.
BiSeries one_minus_y_times(const TruncatedSeries& f, std::size_t J, std::size_t K);

struct CyclotomicReport {
  std::size_t J = 0, K = 0;
  BiSeries lhs{0, 0};  // 1 / (1 - y f(z))
  BiSeries rhs{0, 0};  // prod (1 - z^j y^k)^(-m_f(j,k))
  bool pass = false;
  std::optional<std::pair<std::size_t, std::size_t>> first_difference;
};

// Compares 1/(1 - y f(z)) with the product built from the Witt table of f.
CyclotomicReport cyclotomic_check(const TruncatedSeries& f, std::size_t J, std::size_t K);

}  // namespace wittkit
