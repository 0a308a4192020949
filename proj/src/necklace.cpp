#include "wittkit/necklace.hpp"

#include <numeric>
#include <sstream>

#include "wittkit/error.hpp"

namespace wittkit {

std::uint64_t Composition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::uint64_t Composition::gcd() const {
  std::uint64_t g = 0;
  for (auto p : parts_) g = std::gcd(g, p);
  return g;
}

Composition Composition::divided_by(std::uint64_t d) const {
  std::vector<std::uint64_t> out(parts_);
  for (auto& p : out) {
    if (d == 0 || p % d != 0) throw UsageError("composition entry not divisible by " + std::to_string(d));
    p /= d;
  }
  return Composition(std::move(out));
}

Composition Composition::with_appended(std::uint64_t m) const {
  std::vector<std::uint64_t> out(parts_);
  out.push_back(m);
  return Composition(std::move(out));
}

std::string Composition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

Composition parse_composition(const std::string& text) {
  std::vector<std::uint64_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("malformed composition '" + text + "'");
    }
    parts.push_back(std::stoull(item));
  }
  if (parts.empty()) throw UsageError("empty composition");
  return Composition(std::move(parts));
}

Integer necklace_poly(const Integer& alpha, std::int64_t n) {
  if (n < 1) throw UsageError("necklace_poly: n must be >= 1");
  Integer sum = 0;
  for (auto d : divisors(n)) {
    int mu = moebius(n / d);
    if (mu == 0) continue;
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), alpha.get_mpz_t(), static_cast<unsigned long>(d));
    if (mu > 0) sum += power; else sum -= power;
  }
  return exact_div(sum, Integer(static_cast<long>(n)), "necklace_poly");
}

namespace {

void require_nonzero(const Composition& c, const char* who) {
  if (c.size() == 0 || c.total() == 0) {
    throw UsageError(std::string(who) + ": composition must have positive total");
  }
}

// sum_{d | g} mu(d) sign(d) multinomial(n/d; c/d), g = gcd(c).
template <typename Sign>
Integer moebius_multinomial_sum(const Composition& c, Sign sign) {
  std::uint64_t n = c.total();
  Integer sum = 0;
  for (auto d : divisors(static_cast<std::int64_t>(c.gcd()))) {
    int mu = moebius(d);
    if (mu == 0) continue;
    auto ud = static_cast<std::uint64_t>(d);
    Composition reduced = c.divided_by(ud);
    Integer term = multinomial(n / ud, reduced.parts());
    if (mu * sign(ud) > 0) sum += term; else sum -= term;
  }
  return sum;
}

}  // namespace

Integer necklace_count(const Composition& c) {
  require_nonzero(c, "necklace_count");
  Integer sum = moebius_multinomial_sum(c, [](std::uint64_t) { return 1; });
  Integer result = exact_div(sum, Integer(static_cast<unsigned long>(c.total())), "necklace_count");
  if (result < 0) throw MathError("necklace_count: negative count for " + c.to_string());
  return result;
}

Integer v_count(const Composition& c, std::size_t k) {
  require_nonzero(c, "v_count");
  if (k < 1 || k > c.size()) {
    throw UsageError("v_count: k must satisfy 1 <= k <= " + std::to_string(c.size()));
  }
  std::uint64_t tk = 0;
  for (std::size_t i = 0; i < k; ++i) tk += c[i];
  Integer sum = moebius_multinomial_sum(c, [tk](std::uint64_t d) { return ((tk / d) % 2 == 0) ? 1 : -1; });
  if (tk % 2 == 1) sum = -sum;
  return exact_div(sum, Integer(static_cast<unsigned long>(c.total())), "v_count");
}

Integer necklace_closed(std::uint64_t m, ClosedForm which) {
  switch (which) {
    case ClosedForm::kZeroM:
      if (m < 1) throw UsageError("M(0,m) needs m >= 1");
      return m == 1 ? 1 : 0;
    case ClosedForm::kOneM:
      return 1;
    case ClosedForm::kTwoM:
      return Integer(static_cast<unsigned long>(m % 2 == 0 ? m / 2 : (m + 1) / 2));
  }
  throw UsageError("unknown closed form");
}

}  // namespace wittkit
