#include "wittkit/batteries.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "wittkit/analytic.hpp"
#include "wittkit/error.hpp"
#include "wittkit/identities.hpp"
#include "wittkit/necklace.hpp"
#include "wittkit/product.hpp"
#include "wittkit/scan.hpp"
#include "wittkit/witt.hpp"
#include "wittkit/words.hpp"

namespace wittkit {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

TruncatedSeries random_series(Rng& rng, std::size_t order, long max_degree, long lo, long hi) {
  long degree = std::min<long>(uniform(rng, 0, max_degree), static_cast<long>(order));
  std::vector<long> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = uniform(rng, lo, hi);
  return TruncatedSeries::from_integers(order, std::span<const long>(c));
}

// Runs body and fills in the timing; body returns an empty string on
// success or a description of the first failure.
CheckResult timed(const std::string& name, const std::function<std::string(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  CheckResult out{name, false, "", 0};
  std::string summary;
  try {
    std::string failure = body(summary);
    out.pass = failure.empty();
    out.detail = out.pass ? summary : failure;
  } catch (const std::exception& e) {
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// All vectors of `letters` non-negative entries with 1 <= sum <= max_total.
void for_each_composition(std::size_t letters, std::uint64_t max_total,
                          const std::function<void(const Composition&)>& visit) {
  std::vector<std::uint64_t> parts(letters, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i == letters) {
      if (left < max_total) visit(Composition(parts));
      return;
    }
    for (std::uint64_t v = 0; v <= left; ++v) {
      parts[i] = v;
      rec(i + 1, left - v);
    }
    parts[i] = 0;
  };
  rec(0, max_total);
}

bool nonnegative(const TruncatedSeries& s) {
  for (const auto& c : s.coeffs()) {
    if (c < 0) return false;
  }
  return true;
}

std::string describe(const TruncatedSeries& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j <= static_cast<std::size_t>(std::max(0L, s.degree())); ++j) {
    os << (j ? "," : "") << to_string(s[j]);
  }
  os << "]";
  return os.str();
}

// |a - b| <= bound, all as MPFR values.
bool within(const BigDecimal& a, const BigDecimal& b, const BigDecimal& bound, std::string* gap = nullptr) {
  BigDecimal d(std::max(a.precision(), b.precision()));
  mpfr_sub(d.get(), a.get(), b.get(), MPFR_RNDN);
  mpfr_abs(d.get(), d.get(), MPFR_RNDN);
  if (gap) *gap = d.to_string(3);
  return mpfr_cmp(d.get(), bound.get()) <= 0;
}

BigDecimal power_of_ten(int e) {
  BigDecimal out(64);
  mpfr_set_si(out.get(), 10, MPFR_RNDN);
  mpfr_pow_si(out.get(), out.get(), e, MPFR_RNDN);
  return out;
}

RationalFunction artin_h() { return {{Integer(1), Integer(-1), Integer(-1)}, {Integer(1), Integer(-1)}}; }
RationalFunction twin_h() { return {{Integer(1), Integer(-2)}, {Integer(1), Integer(-2), Integer(1)}}; }
RationalFunction zeta2_h() { return {{Integer(1), Integer(0), Integer(-1)}, {Integer(1)}}; }

}  // namespace

CheckResult check_oracle_equivalence(const BatteryConfig& cfg) {
  return timed("oracle equivalence", [&](std::string& summary) -> std::string {
    const std::size_t letters = cfg.max_letters;
    // Duval over the full alphabet once; a content with fewer letters is the
    // same as its zero-padded version.
    std::map<Composition, std::uint64_t> lyndon;
    for_each_lyndon_word(cfg.max_total, static_cast<int>(letters), [&](const Word& w) {
      std::vector<std::uint64_t> content(letters, 0);
      for (int x : w) ++content[static_cast<std::size_t>(x - 1)];
      ++lyndon[Composition(content)];
    });
    std::size_t checked = 0;
    std::string failure;
    for (std::size_t r = 1; r <= letters && failure.empty(); ++r) {
      for_each_composition(r, cfg.max_total, [&](const Composition& c) {
        if (!failure.empty()) return;
        std::vector<std::uint64_t> padded = c.parts();
        padded.resize(letters, 0);
        auto it = lyndon.find(Composition(padded));
        Integer duval = it == lyndon.end() ? 0 : Integer(static_cast<unsigned long>(it->second));
        Integer closed = necklace_count(c);
        Integer brute = aperiodic_count(c, cfg.max_total);
        ++checked;
        if (closed != brute || closed != duval) {
          failure = "content " + c.to_string() + ": formula " + to_string(closed) + ", aperiodic " +
                    to_string(brute) + ", Lyndon " + to_string(duval);
        }
      });
    }
    summary = std::to_string(checked) + " compositions, total <= " + std::to_string(cfg.max_total) + ", <= " +
              std::to_string(letters) + " letters";
    return failure;
  });
}

CheckResult check_closed_forms(const BatteryConfig& cfg) {
  return timed("closed forms", [&](std::string& summary) -> std::string {
    std::size_t checked = 0;
    for (std::uint64_t m = 0; m <= cfg.closed_form_m; ++m) {
      if (m >= 1 && necklace_closed(m, ClosedForm::kZeroM) != necklace_count({0, m})) {
        return "M(0," + std::to_string(m) + ")";
      }
      if (m >= 1 && necklace_closed(m, ClosedForm::kOneM) != necklace_count({1, m})) {
        return "M(1," + std::to_string(m) + ")";
      }
      if (necklace_closed(m, ClosedForm::kTwoM) != necklace_count({2, m})) return "M(2," + std::to_string(m) + ")";
      checked += 3;
    }
    // (m + 1) M(c, m + 1) = (n + m) M(c, m) when gcd(c) = 1.
    std::size_t ratios = 0;
    std::string failure;
    for (std::size_t r = 1; r <= 3 && failure.empty(); ++r) {
      for_each_composition(r, 8, [&](const Composition& c) {
        if (!failure.empty() || c.gcd() != 1) return;
        const std::uint64_t n = c.total();
        for (std::uint64_t m = 0; m < 20; ++m) {
          Integer lhs = Integer(static_cast<unsigned long>(m + 1)) * necklace_count(c.with_appended(m + 1));
          Integer rhs = Integer(static_cast<unsigned long>(n + m)) * necklace_count(c.with_appended(m));
          ++ratios;
          if (lhs != rhs) {
            failure = "ratio recursion at " + c.to_string() + ", m = " + std::to_string(m);
            return;
          }
        }
      });
    }
    summary = std::to_string(checked) + " closed-form values (m <= " + std::to_string(cfg.closed_form_m) + "), " +
              std::to_string(ratios) + " ratio steps";
    return failure;
  });
}

CheckResult check_identity_battery(const BatteryConfig& cfg) {
  return timed("identity battery", [&](std::string& summary) -> std::string {
    Rng rng(cfg.seed);
    constexpr std::size_t kOrder = 24;
    std::size_t checked = 0;
    for (std::size_t c = 0; c < cfg.identity_cases; ++c) {
      TruncatedSeries f = random_series(rng, kOrder, 6, -5, 5);
      TruncatedSeries g = random_series(rng, kOrder, 6, -5, 5);
      for (std::int64_t r = 1; r <= 8; ++r) {
        const long kcap = static_cast<long>(kOrder) / r;
        std::vector<std::pair<IdentityId, IdentityParams>> cases;
        IdentityParams p;
        p.r = r;
        p.k = uniform(rng, 0, std::min(3L, kcap));
        cases.emplace_back(IdentityId::kMonomialShift, p);
        p.k = 1;
        cases.emplace_back(IdentityId::kPowerSum, p);
        cases.emplace_back(IdentityId::kSignFlip, p);
        cases.emplace_back(IdentityId::kProduct, p);
        p.k = uniform(rng, 1, std::min(4L, kcap));
        cases.emplace_back(IdentityId::kPower, p);
        p.k = 1;
        p.v = uniform(rng, 1, 4);
        p.w = uniform(rng, 1, 4);
        cases.emplace_back(IdentityId::kMixedPower, p);
        for (const auto& [id, params] : cases) {
          IdentityReport rep = verify_identity(id, f, g, params);
          ++checked;
          if (!rep.pass) {
            std::string where;
            for (const auto& [k, v] : rep.params) where += " " + k + "=" + v;
            return identity_name(id) + " failed for f = " + describe(f) + ", g = " + describe(g) + where +
                   " at z^" + std::to_string(rep.first_difference.value_or(0));
          }
        }
      }
    }
    summary = std::to_string(checked) + " identity evaluations over " + std::to_string(cfg.identity_cases) +
              " random pairs, r <= 8, N = 24";
    return "";
  });
}

CheckResult check_positivity_battery(const BatteryConfig& cfg) {
  return timed("integrality and positivity", [&](std::string& summary) -> std::string {
    Rng rng(cfg.seed ^ 0x4a4a);
    constexpr std::size_t kOrder = 30;
    std::size_t checked = 0;
    for (std::size_t c = 0; c < cfg.integrality_cases; ++c) {
      TruncatedSeries f = random_series(rng, kOrder, 12, -5, 5);
      TruncatedSeries pos = random_series(rng, kOrder, 12, 0, 5);
      for (std::int64_t r = 1; r <= 10; ++r) {
        TruncatedSeries w = witt_transform(f, r);  // throws if integrality is lost
        if (!w.is_integral()) return "non-integral transform of " + describe(f);
        if (!nonnegative(witt_transform(pos, r))) return "negative coefficient for f = " + describe(pos);
        TruncatedSeries neg = witt_transform(ps_neg(pos), r);
        if (!nonnegative(r % 2 == 0 ? neg : ps_neg(neg))) return "sign-flip positivity for f = -" + describe(pos);
        checked += 3;
      }
    }
    for (std::size_t c = 0; c < cfg.reciprocal_cases; ++c) {
      // Palindromic polynomial of exact degree n.
      const long n = uniform(rng, 0, 6);
      std::vector<long> a(static_cast<std::size_t>(n + 1));
      for (long j = 0; j <= n / 2; ++j) {
        long v = 0;
        while (j == 0 && v == 0) v = uniform(rng, -5, 5);
        if (j > 0) v = uniform(rng, -5, 5);
        a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(n - j)] = v;
      }
      for (std::int64_t r = 1; r <= 10; ++r) {
        const auto top = static_cast<std::size_t>(r * n);
        TruncatedSeries w = witt_transform(TruncatedSeries::from_integers(top + 2, std::span<const long>(a)), r);
        for (std::size_t j = 0; j <= top + 2; ++j) {
          Rational mirror = j <= top ? w[top - j] : Rational(0);
          if (w[j] != mirror) {
            return "self-reciprocity lost for r = " + std::to_string(r) + " at z^" + std::to_string(j);
          }
        }
        ++checked;
      }
    }
    for (std::size_t c = 0; c < cfg.dominance_cases; ++c) {
      TruncatedSeries f = random_series(rng, kOrder, 8, 0, 4);
      TruncatedSeries g = ps_add(f, random_series(rng, kOrder, 8, 0, 3));
      for (std::int64_t r = 1; r <= 10; ++r) {
        if (!nonnegative(ps_sub(witt_transform(g, r), witt_transform(f, r)))) {
          return "dominance fails for f = " + describe(f) + ", g = " + describe(g);
        }
        ++checked;
      }
    }
    summary = std::to_string(checked) + " transform checks (integrality, positivity, sign flip, reciprocity, dominance)";
    return "";
  });
}

CheckResult check_monotonicity_windows(const BatteryConfig& cfg) {
  return timed("monotonicity windows", [&](std::string& summary) -> std::string {
    (void)cfg;
    const ScanBounds bounds{10, 12, 6};
    const std::vector<ScanFamily> all = {ScanFamily::k51,  ScanFamily::k52,  ScanFamily::k53a,
                                         ScanFamily::k53b, ScanFamily::k53c, ScanFamily::k54a,
                                         ScanFamily::k54b, ScanFamily::k54c};
    auto poly = [](std::initializer_list<long> c) { return TruncatedSeries::from_integers(12, c); };
    auto geometric = [](long scale, std::int64_t power) {
      RationalFunction h{{Integer(scale)}, {Integer(1), Integer(-1)}};
      return ps_pow(ratfun_expand(h, 12), power);
    };
    struct Fixture {
      std::string name;
      TruncatedSeries f;
    };
    const std::vector<Fixture> fixtures = {{"1+z", poly({1, 1})},
                                           {"1+z+z^2", poly({1, 1, 1})},
                                           {"1+2z+3z^2", poly({1, 2, 3})},
                                           {"1/(1-z)", geometric(1, 1)},
                                           {"1/(1-z)^2", geometric(1, 2)},
                                           {"2/(1-z)", geometric(2, 1)}};
    std::size_t ran = 0, rejected = 0, comparisons = 0;
    for (const auto& fx : fixtures) {
      bool monotone_coeffs = true;
      for (std::size_t j = 1; j <= fx.f.order(); ++j) monotone_coeffs = monotone_coeffs && fx.f[j] >= fx.f[j - 1];
      for (ScanFamily fam : all) {
        const bool needs_monotone = fam != ScanFamily::k51 && fam != ScanFamily::k52;
        try {
          ScanReport rep = monotonicity_scan(fx.f, fam, bounds);
          if (needs_monotone && !monotone_coeffs) return scan_family_name(fam) + " accepted " + fx.name;
          if (!rep.pass) return scan_family_name(fam) + " on " + fx.name + ": " + rep.violation.value_or("");
          ++ran;
          comparisons += rep.comparisons;
        } catch (const PreconditionError& e) {
          if (!needs_monotone || monotone_coeffs) return scan_family_name(fam) + " rejected " + fx.name + ": " + e.what();
          ++rejected;
        }
      }
    }
    ScanReport p6 = monotonicity_scan(TruncatedSeries(), ScanFamily::kP6, bounds);
    if (!p6.pass) return "P6: " + p6.violation.value_or("");
    summary = std::to_string(ran) + " scans passed (" + std::to_string(comparisons + p6.comparisons) +
              " values), " + std::to_string(rejected) + " rejected on the non-decreasing hypothesis, P6 c <= 6";
    return "";
  });
}

CheckResult check_cyclotomic_battery(const BatteryConfig& cfg) {
  return timed("cyclotomic identities", [&](std::string& summary) -> std::string {
    const std::vector<std::pair<std::string, TruncatedSeries>> fixtures = {
        {"2", TruncatedSeries::constant(2, 8)},
        {"1+z", TruncatedSeries::from_integers(8, {1, 1})},
        {"1+z+z^2", TruncatedSeries::from_integers(8, {1, 1, 1})}};
    for (const auto& [name, f] : fixtures) {
      CyclotomicReport rep = cyclotomic_check(f, 8, 8);
      if (!rep.pass) return "cyclotomic check failed for f = " + name;
    }
    Rng rng(cfg.seed ^ 0xc1c1);
    std::vector<TruncatedSeries> bridge = {TruncatedSeries::from_integers(10, {0, 1}),
                                           TruncatedSeries::from_integers(10, {0, 1, 1}),
                                           TruncatedSeries::from_integers(10, {0, 2, 0, -1})};
    for (int i = 0; i < 12; ++i) {
      TruncatedSeries f = random_series(rng, 10, 6, -3, 3);
      f.set(0, 0);
      bridge.push_back(f);
    }
    for (const auto& f : bridge) {
      Expansion2D e = peel_2d(one_minus_y_times(f, 10, 10));
      WittTable t = witt_table(f, 10);
      for (std::size_t k = 0; k <= 10; ++k) {
        for (std::size_t j = 0; j <= 10; ++j) {
          Rational expect = k == 0 ? Rational(0) : t.at(j, static_cast<std::int64_t>(k));
          if (Rational(e.e(j, k)) != expect) {
            return "bridge identity fails for f = " + describe(f) + " at (" + std::to_string(j) + "," +
                   std::to_string(k) + ")";
          }
        }
      }
    }
    summary = "3 cyclotomic checks at (8,8), " + std::to_string(bridge.size()) + " peel/table comparisons at (10,10)";
    return "";
  });
}

CheckResult check_expansion_uniqueness(const BatteryConfig& cfg) {
  return timed("expansion uniqueness", [&](std::string& summary) -> std::string {
    Rng rng(cfg.seed ^ 0xe7e7);
    constexpr std::size_t kOrder = 24;
    for (std::size_t c = 0; c < cfg.expansion_cases; ++c) {
      TruncatedSeries f = random_series(rng, kOrder, static_cast<long>(kOrder), -5, 5);
      f.set(0, 1);
      Expansion1D e = peel_1d(f);
      TruncatedSeries back = reconstruct_1d(e, kOrder);
      if (back != f) return "reconstruction differs for " + describe(f);
      if (peel_1d(back) != e) return "re-peel differs for " + describe(f);
    }
    const std::size_t grids = std::max<std::size_t>(1, cfg.expansion_cases / 5);
    for (std::size_t c = 0; c < grids; ++c) {
      BiSeries F(6, 6);
      for (std::size_t j = 0; j <= 6; ++j)
        for (std::size_t k = 0; k <= 6; ++k) F.at(j, k) = uniform(rng, -3, 3);
      F.at(0, 0) = 1;
      Expansion2D kmaj = peel_2d(F, PeelOrder::kKMajor);
      Expansion2D jmaj = peel_2d(F, PeelOrder::kJMajor);
      if (kmaj != jmaj) return "k-major and j-major peels differ";
      if (reconstruct_2d(kmaj, 6, 6) != F) return "two-variable reconstruction differs";
      if (peel_2d(reconstruct_2d(kmaj, 6, 6)) != kmaj) return "two-variable re-peel differs";
    }
    summary = std::to_string(cfg.expansion_cases) + " one-variable round trips at N = 24, " + std::to_string(grids) +
              " two-variable grids in both orders";
    return "";
  });
}

CheckResult check_artin_constant(const BatteryConfig& cfg) {
  return timed("Artin constant", [&](std::string& summary) -> std::string {
    ProductEstimate a = euler_product({artin_h(), 0, cfg.artin_digits});
    std::string text = a.value.to_string(cfg.artin_digits);
    summary = text + " (" + std::to_string(a.terms) + " exponents)";
    if (text.rfind("0.3739558136", 0) != 0) return "got " + text;
    return "";
  });
}

CheckResult check_analytic_crosschecks(const BatteryConfig& cfg) {
  return timed("analytic cross-checks", [&](std::string& summary) -> std::string {
    const int D = cfg.analytic_digits;
    std::ostringstream notes;
    struct Fx {
      std::string name;
      RationalFunction h;
      std::uint64_t m;
    };
    const std::vector<Fx> products = {{"1-z^2", zeta2_h(), 1}, {"artin", artin_h(), 0}, {"twin", twin_h(), 1}};
    for (const auto& fx : products) {
      ProductEstimate fast = euler_product({fx.h, fx.m, D});
      ProductEstimate slow = euler_product_direct({fx.h, fx.m, D}, cfg.direct_limit);
      BigDecimal bound(64);
      mpfr_add(bound.get(), fast.error.get(), slow.error.get(), MPFR_RNDU);
      std::string gap;
      if (!within(fast.value, slow.value, bound, &gap)) {
        return fx.name + ": zeta route " + fast.value.to_string(D) + " vs direct " + slow.value.to_string(D) +
               " (gap " + gap + " > " + bound.to_string(3) + ")";
      }
      ProductEstimate finer = euler_product({fx.h, fx.m, D + 10});
      if (!within(fast.value, finer.value, power_of_ten(-D))) return fx.name + ": unstable under D + 10";
      notes << fx.name << " gap " << gap << "; ";
    }

    // zeta(2) against pi^2 / 6.
    BigDecimal z2 = zeta(2, D);
    BigDecimal exact(z2.precision());
    mpfr_const_pi(exact.get(), MPFR_RNDN);
    mpfr_sqr(exact.get(), exact.get(), MPFR_RNDN);
    mpfr_div_ui(exact.get(), exact.get(), 6, MPFR_RNDN);
    if (!within(z2, exact, power_of_ten(-D))) return "zeta(2) differs from pi^2/6";

    // Stability of the remaining analytic values.
    const std::vector<std::pair<std::string, std::function<BigDecimal(int)>>> values = {
        {"zeta(3)", [](int d) { return zeta(3, d); }},
        {"zeta_1(2)", [](int d) { return partial_zeta(1, 2, d); }},
        {"hurwitz(2,1/3)", [](int d) { return hurwitz_zeta(2, Rational(1, 3), d); }},
        {"L(2,-4)", [](int d) { return l_series(2, RealCharacter::kronecker(-4), d); }},
        {"L(3,5)", [](int d) { return l_series(3, RealCharacter::kronecker(5), d); }}};
    for (const auto& [name, fn] : values) {
      if (!within(fn(D), fn(D + 10), power_of_ten(-D))) return name + ": unstable under D + 10";
    }

    // B_chi through L-series against the direct product.
    const int B = cfg.b_chi_digits;
    const std::vector<RealCharacter> chars = {RealCharacter::trivial(), RealCharacter::kronecker(-4),
                                              RealCharacter::kronecker(5)};
    for (const auto& chi : chars) {
      BChiResult res = b_chi(chi, B, cfg.direct_limit);
      BigDecimal six(64);
      mpfr_mul_d(six.get(), res.lseries.value.get(), 1e-6, MPFR_RNDN);
      mpfr_abs(six.get(), six.get(), MPFR_RNDN);
      std::string gap;
      if (!within(res.lseries.value, res.direct->value, six, &gap)) {
        return "B_chi " + chi.label() + ": L-series " + res.lseries.value.to_string(B) + " vs direct " +
               res.direct->value.to_string(B);
      }
      BChiResult finer = b_chi(chi, B + 10);
      if (!within(res.lseries.value, finer.lseries.value, power_of_ten(-B))) {
        return "B_chi " + chi.label() + ": unstable under D + 10";
      }
      if (chi.modulus() == 1 && !within(res.lseries.value, BigDecimal(Rational(1), 64), power_of_ten(-B))) {
        return "B_chi for the trivial character is " + res.lseries.value.to_string(B + 4);
      }
      notes << "B[" << chi.label() << "] = " << res.lseries.value.to_string(B) << " gap " << gap << "; ";
    }
    notes << "zeta(2) within 1e-" << D << " of pi^2/6; all values stable under D + 10";
    summary = notes.str();
    return "";
  });
}

std::vector<CheckResult> run_batteries(const std::string& scope, const BatteryConfig& cfg) {
  static const std::vector<std::string> kScopes = {"combinatorial", "identities", "expansion", "analytic", "all"};
  if (std::find(kScopes.begin(), kScopes.end(), scope) == kScopes.end()) {
    throw UsageError("unknown scope '" + scope + "'");
  }
  std::vector<CheckResult> out;
  auto want = [&](const char* s) { return scope == "all" || scope == s; };
  if (want("combinatorial") && cfg.max_total >= 1) {
    out.push_back(check_oracle_equivalence(cfg));
    out.push_back(check_closed_forms(cfg));
  }
  if (want("identities") && cfg.identity_cases >= 1) {
    out.push_back(check_identity_battery(cfg));
    out.push_back(check_positivity_battery(cfg));
    out.push_back(check_monotonicity_windows(cfg));
  }
  if (want("expansion") && cfg.expansion_cases >= 1) {
    out.push_back(check_cyclotomic_battery(cfg));
    out.push_back(check_expansion_uniqueness(cfg));
  }
  if (want("analytic") && cfg.analytic_digits >= 1) {
    out.push_back(check_artin_constant(cfg));
    out.push_back(check_analytic_crosschecks(cfg));
  }
  return out;
}

BatteryConfig config_for_budget(std::uint64_t budget) {
  BatteryConfig cfg;
  cfg.max_total = std::min<std::uint64_t>(cfg.max_total, budget);
  cfg.closed_form_m = std::min<std::uint64_t>(cfg.closed_form_m, budget);
  cfg.identity_cases = std::min<std::size_t>(cfg.identity_cases, budget);
  cfg.integrality_cases = std::min<std::size_t>(cfg.integrality_cases, budget);
  cfg.reciprocal_cases = std::min<std::size_t>(cfg.reciprocal_cases, budget);
  cfg.dominance_cases = std::min<std::size_t>(cfg.dominance_cases, budget);
  cfg.expansion_cases = std::min<std::size_t>(cfg.expansion_cases, budget);
  if (budget == 0) cfg.analytic_digits = 0;
  return cfg;
}

}  // namespace wittkit
