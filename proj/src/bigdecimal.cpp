#include "wittkit/bigdecimal.hpp"

#include <cmath>

#include "wittkit/error.hpp"

namespace wittkit {

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) throw UsageError("digits must be >= 1");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

BigDecimal::BigDecimal(mpfr_prec_t bits) : live_(true) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

BigDecimal::BigDecimal(const Rational& value, mpfr_prec_t bits) : BigDecimal(bits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigDecimal::BigDecimal(const BigDecimal& other) : live_(true) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigDecimal::BigDecimal(BigDecimal&& other) noexcept : BigDecimal(other.live_ ? other.precision() : 64) {
  mpfr_swap(value_, other.value_);
}

BigDecimal& BigDecimal::operator=(const BigDecimal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigDecimal& BigDecimal::operator=(BigDecimal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigDecimal::~BigDecimal() {
  if (live_) mpfr_clear(value_);
}

BigDecimal BigDecimal::parse(const std::string& text, mpfr_prec_t bits) {
  BigDecimal out(bits);
  char* end = nullptr;
  if (!text.empty()) mpfr_strtofr(out.value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || *end != '\0') throw UsageError("malformed decimal '" + text + "'");
  return out;
}

std::string BigDecimal::to_string(int digits) const {
  if (digits < 1) throw UsageError("digits must be >= 1");
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^exp
  if (exp > -6 && exp <= 21) {
    if (exp <= 0) return sign + "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
    auto e = static_cast<std::size_t>(exp);
    if (e >= mant.size()) return sign + mant + std::string(e - mant.size(), '0');
    return sign + mant.substr(0, e) + "." + mant.substr(e);
  }
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  long e10 = static_cast<long>(exp) - 1;
  return out + (e10 < 0 ? "e-" : "e+") + std::to_string(std::labs(e10));
}

}  // namespace wittkit
