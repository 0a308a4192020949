#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "wittkit/series.hpp"

namespace wittkit {

// Identity families checked by verify_identity. The string ids used on the
// command line are given next to each entry.
enum class IdentityId {
  kMonomialShift,  // "T3.1": W_{z^k f}^(r) = z^{kr} W_f^(r)
  kPowerSum,       // "T3.2": sum_{d|r} (r/d) W_f^(r/d)(z^d) = f^r
  kSignFlip,       // "T3.3": (-1)^r W_{-f}^(r) vs W_f^(r) (+ W_f^(r/2)(z^2) when r = 2 mod 4)
  kProduct,        // "T3.4": W_{fg}^(r) = sum_{[i,j]=r} (i,j) W_f^(i)(z^{r/i}) W_g^(j)(z^{r/j})
  kPower,          // "T3.5": W_{f^k}^(r) = sum_{[j,k]=rk} (j/r) W_f^(j)(z^{rk/j})
  kMixedPower,     // "T3.6": W_{f^a g^b}^(r), a = w/(v,w), b = v/(v,w)
  kNecklaceProduct,  // "T1.1": M(alpha beta; r) = sum_{[i,j]=r} (i,j) M(alpha;i) M(beta;j)
  kNecklacePower,    // "T1.2": M(beta^k; r) = sum_{[j,k]=rk} (j/r) M(beta;j)
};

std::string identity_name(IdentityId id);
// Throws UsageError for unknown ids.
IdentityId parse_identity_id(const std::string& text);

struct IdentityParams {
  std::int64_t r = 1;
  std::int64_t k = 1;
  std::int64_t v = 1;
  std::int64_t w = 1;
  Integer alpha = 2;
  Integer beta = 2;
};

struct IdentityReport {
  IdentityId id;
  std::map<std::string, std::string> params;
  TruncatedSeries lhs;
  TruncatedSeries rhs;
  bool pass = false;
  std::optional<std::size_t> first_difference;
};

// Smallest truncation order at which verify_identity accepts the request:
// the largest monomial shift z^{kr} for the shift identity, r*k for the power
// identity and r otherwise. Necklace identities need none.
std::size_t required_order(IdentityId id, const IdentityParams& p);

// Evaluates both sides exactly at the common truncation of f and g. The
// necklace identities ignore f and g and work on constant series.
IdentityReport verify_identity(IdentityId id, const TruncatedSeries& f, const TruncatedSeries& g,
                               const IdentityParams& p);

}  // namespace wittkit
