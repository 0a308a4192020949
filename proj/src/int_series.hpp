#pragma once

// Dense integer polynomial kernels shared by the exact modules. All vectors
// hold the coefficients of z^0..z^N; results keep the length of the inputs.

#include <cstddef>
#include <vector>

#include "wittkit/arith.hpp"
#include "wittkit/series.hpp"

namespace wittkit::detail {

using IntPoly = std::vector<Integer>;

IntPoly mul_trunc(const IntPoly& a, const IntPoly& b);
IntPoly pow_trunc(const IntPoly& a, std::int64_t k);
IntPoly inflate(const IntPoly& a, std::int64_t d);

// a = values / den with den > 0 the lcm of the coefficient denominators.
struct ScaledPoly {
  IntPoly values;
  Integer den;
};

ScaledPoly to_scaled(const TruncatedSeries& a, std::size_t order);
TruncatedSeries from_scaled(const IntPoly& values, const Integer& den);

// Multiplies `a` in place by (1 - z^n)^e, truncated to a.size().
void mul_binomial_factor(IntPoly& a, std::size_t n, const Integer& e);

}  // namespace wittkit::detail
