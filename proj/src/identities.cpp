#include "wittkit/identities.hpp"

#include <array>
#include <functional>
#include <numeric>
#include <utility>

#include "wittkit/error.hpp"
#include "wittkit/necklace.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

namespace {

constexpr std::array<std::pair<IdentityId, const char*>, 8> kNames{{
    {IdentityId::kMonomialShift, "T3.1"},
    {IdentityId::kPowerSum, "T3.2"},
    {IdentityId::kSignFlip, "T3.3"},
    {IdentityId::kProduct, "T3.4"},
    {IdentityId::kPower, "T3.5"},
    {IdentityId::kMixedPower, "T3.6"},
    {IdentityId::kNecklaceProduct, "T1.1"},
    {IdentityId::kNecklacePower, "T1.2"},
}};

// Memoizes W_f^(i) for one series.
class WittCache {
 public:
  explicit WittCache(TruncatedSeries f) : f_(std::move(f)) {}
  const TruncatedSeries& get(std::int64_t i) {
    auto it = cache_.find(i);
    if (it == cache_.end()) it = cache_.emplace(i, witt_transform(f_, i)).first;
    return it->second;
  }

 private:
  TruncatedSeries f_;
  std::map<std::int64_t, TruncatedSeries> cache_;
};

void require_positive(std::int64_t value, const char* name) {
  if (value < 1) throw UsageError(std::string("verify_identity: ") + name + " must be >= 1");
}

std::optional<std::size_t> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  for (std::size_t j = 0; j <= n; ++j) {
    if (a[j] != b[j]) return j;
  }
  return std::nullopt;
}

TruncatedSeries add_scaled(const TruncatedSeries& acc, const TruncatedSeries& term, const Rational& c) {
  return ps_add(acc, ps_scale(term, c));
}

// sum_{[i,j]=r} (i,j) W_f^(i)(z^{r/i}) W_g^(j)(z^{r/j})
TruncatedSeries product_rhs(WittCache& wf, WittCache& wg, std::int64_t r, std::size_t order) {
  TruncatedSeries acc(order);
  for (auto i : divisors(r)) {
    for (auto j : divisors(r)) {
      if (lcm(i, j) != r) continue;
      TruncatedSeries term = ps_mul(ps_inflate(wf.get(i), r / i), ps_inflate(wg.get(j), r / j));
      acc = add_scaled(acc, term, Rational(gcd(i, j)));
    }
  }
  return acc;
}

// sum_{[j,k]=rk} (j/r) W_f^(j)(z^{rk/j})
TruncatedSeries power_rhs(WittCache& wf, std::int64_t r, std::int64_t k, std::size_t order) {
  TruncatedSeries acc(order);
  for (auto j : divisors(r * k)) {
    if (lcm(j, k) != r * k) continue;
    acc = add_scaled(acc, ps_inflate(wf.get(j), r * k / j), Rational(j, r));
  }
  return acc;
}

}  // namespace

std::string identity_name(IdentityId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "?";
}

IdentityId parse_identity_id(const std::string& text) {
  for (const auto& [key, name] : kNames) {
    if (text == name) return key;
  }
  throw UsageError("unknown identity id '" + text + "'");
}

std::size_t required_order(IdentityId id, const IdentityParams& p) {
  switch (id) {
    case IdentityId::kMonomialShift:
    case IdentityId::kPower:
      return static_cast<std::size_t>(p.k * p.r);
    case IdentityId::kNecklaceProduct:
    case IdentityId::kNecklacePower:
      return 0;
    default:
      return static_cast<std::size_t>(p.r);
  }
}

IdentityReport verify_identity(IdentityId id, const TruncatedSeries& f, const TruncatedSeries& g,
                               const IdentityParams& p) {
  require_positive(p.r, "r");
  const std::int64_t r = p.r;
  IdentityReport report{id, {{"r", std::to_string(r)}}, {}, {}, false, std::nullopt};

  const bool binary = id == IdentityId::kProduct || id == IdentityId::kMixedPower;
  const bool necklace = id == IdentityId::kNecklaceProduct || id == IdentityId::kNecklacePower;
  if (id == IdentityId::kMonomialShift) {
    if (p.k < 0) throw UsageError("verify_identity: k must be >= 0");
  } else if (id == IdentityId::kPower || id == IdentityId::kNecklacePower) {
    require_positive(p.k, "k");
  }
  std::size_t order = necklace ? 0 : (binary ? std::min(f.order(), g.order()) : f.order());
  std::size_t needed = required_order(id, p);
  if (order < needed) {
    throw UsageError("verify_identity: truncation order " + std::to_string(order) + " is below the " +
                     std::to_string(needed) + " needed for " + identity_name(id));
  }
  TruncatedSeries ff = necklace ? TruncatedSeries() : f.truncated(order);
  TruncatedSeries gg = binary ? g.truncated(order) : TruncatedSeries(order);

  switch (id) {
    case IdentityId::kMonomialShift: {
      report.params["k"] = std::to_string(p.k);
      auto shift = static_cast<std::size_t>(p.k);
      report.lhs = witt_transform(ps_shift(ff, shift), r);
      report.rhs = ps_shift(witt_transform(ff, r), shift * static_cast<std::size_t>(r));
      break;
    }
    case IdentityId::kPowerSum: {
      TruncatedSeries acc(order);
      for (auto d : divisors(r)) {
        acc = add_scaled(acc, ps_inflate(witt_transform(ff, r / d), d), Rational(r / d));
      }
      report.lhs = acc;
      report.rhs = ps_pow(ff, r);
      break;
    }
    case IdentityId::kSignFlip: {
      TruncatedSeries lhs = witt_transform(ps_neg(ff), r);
      report.lhs = r % 2 == 0 ? lhs : ps_neg(lhs);
      report.rhs = witt_transform(ff, r);
      if (r % 4 == 2) report.rhs = ps_add(report.rhs, ps_inflate(witt_transform(ff, r / 2), 2));
      break;
    }
    case IdentityId::kProduct: {
      WittCache wf(ff), wg(gg);
      report.lhs = witt_transform(ps_mul(ff, gg), r);
      report.rhs = product_rhs(wf, wg, r, order);
      break;
    }
    case IdentityId::kPower: {
      report.params["k"] = std::to_string(p.k);
      WittCache wf(ff);
      report.lhs = witt_transform(ps_pow(ff, p.k), r);
      report.rhs = power_rhs(wf, r, p.k, order);
      break;
    }
    case IdentityId::kMixedPower: {
      require_positive(p.v, "v");
      require_positive(p.w, "w");
      report.params["v"] = std::to_string(p.v);
      report.params["w"] = std::to_string(p.w);
      const std::int64_t g0 = gcd(p.v, p.w);
      const std::int64_t a = p.w / g0;  // exponent of f
      const std::int64_t b = p.v / g0;  // exponent of g
      WittCache wf(ff), wg(gg);
      report.lhs = witt_transform(ps_mul(ps_pow(ff, a), ps_pow(gg, b)), r);
      // Pairs with ij / (vi, wj) = r / (v, w). Every such pair has i | ar and
      // j | br, so f^(i) is substituted at z^{ar/i} and g^(j) at z^{br/j}.
      TruncatedSeries acc(order);
      const std::int64_t bound = r * std::max(p.v, p.w);
      for (std::int64_t i = 1; i <= bound; ++i) {
        for (std::int64_t j = 1; j <= bound; ++j) {
          const std::int64_t inner = gcd(p.v * i, p.w * j);
          if (i * j * g0 != r * inner) continue;
          if ((a * r) % i != 0 || (b * r) % j != 0) {
            throw MathError("mixed-power identity: pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") does not give a series substitution");
          }
          TruncatedSeries term = ps_mul(ps_inflate(wf.get(i), a * r / i), ps_inflate(wg.get(j), b * r / j));
          acc = add_scaled(acc, term, Rational(inner / g0));
        }
      }
      report.rhs = acc;
      break;
    }
    case IdentityId::kNecklaceProduct: {
      report.params["alpha"] = p.alpha.get_str();
      report.params["beta"] = p.beta.get_str();
      WittCache wa(TruncatedSeries::constant(Rational(p.alpha), 0));
      WittCache wb(TruncatedSeries::constant(Rational(p.beta), 0));
      report.lhs = TruncatedSeries::constant(Rational(necklace_poly(p.alpha * p.beta, r)), 0);
      report.rhs = product_rhs(wa, wb, r, 0);
      break;
    }
    case IdentityId::kNecklacePower: {
      report.params["beta"] = p.beta.get_str();
      report.params["k"] = std::to_string(p.k);
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), p.beta.get_mpz_t(), static_cast<unsigned long>(p.k));
      WittCache wb(TruncatedSeries::constant(Rational(p.beta), 0));
      report.lhs = TruncatedSeries::constant(Rational(necklace_poly(power, r)), 0);
      report.rhs = power_rhs(wb, r, p.k, 0);
      break;
    }
  }
  report.first_difference = first_difference(report.lhs, report.rhs);
  report.pass = !report.first_difference.has_value() && report.lhs.order() == report.rhs.order();
  return report;
}

}  // namespace wittkit
