#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wittkit/series.hpp"

namespace wittkit {

// W^(r)_f(z) = (1/r) sum_{d | r} mu(d) f(z^d)^(r/d), at the truncation order
// of f. For integral f the result is checked to be integral (MathError
// naming the coefficient otherwise).
TruncatedSeries witt_transform(const TruncatedSeries& f, std::int64_t r);

// Coefficients m_f(j, k) of W^(k)_f for 0 <= j <= J and 1 <= k <= R.
class WittTable {
 public:
  WittTable(TruncatedSeries f, std::vector<TruncatedSeries> rows);

  const TruncatedSeries& source() const noexcept { return f_; }
  std::int64_t max_order() const noexcept { return static_cast<std::int64_t>(rows_.size()); }
  std::size_t max_degree() const noexcept { return rows_.empty() ? 0 : rows_.front().order(); }
  // m_f(j, k); k is 1-based.
  const Rational& at(std::size_t j, std::int64_t k) const { return rows_.at(static_cast<std::size_t>(k - 1))[j]; }
  const TruncatedSeries& row(std::int64_t k) const { return rows_.at(static_cast<std::size_t>(k - 1)); }
  bool integral() const;

  friend bool operator==(const WittTable&, const WittTable&) = default;

 private:
  TruncatedSeries f_;
  std::vector<TruncatedSeries> rows_;
};

// Builds rows 1..R from cached powers f^k. J defaults to the order of f and
// may not exceed it. Rows are assembled in parallel; the result does not
// depend on the thread count.
WittTable witt_table(const TruncatedSeries& f, std::int64_t R, std::optional<std::size_t> J = std::nullopt);

// Element r-1 holds the r-th member of the sequence.
using SeriesSequence = std::vector<TruncatedSeries>;

// B(r) = sum_{d | r} mu(d) A^(r/d)(z^d).
SeriesSequence moebius_invert_series(const SeriesSequence& a);

// A(r) = sum_{d | r} B^(r/d)(z^d); inverse of moebius_invert_series.
SeriesSequence divisor_sum_series(const SeriesSequence& b);

}  // namespace wittkit
