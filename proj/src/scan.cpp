#include "wittkit/scan.hpp"

#include <array>
#include <functional>
#include <utility>

#include "wittkit/error.hpp"
#include "wittkit/necklace.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

namespace {

constexpr std::array<std::pair<ScanFamily, const char*>, 9> kNames{{
    {ScanFamily::k51, "T5.1"},
    {ScanFamily::k52, "T5.2"},
    {ScanFamily::k53a, "T5.3a"},
    {ScanFamily::k53b, "T5.3b"},
    {ScanFamily::k53c, "T5.3c"},
    {ScanFamily::k54a, "T5.4a"},
    {ScanFamily::k54b, "T5.4b"},
    {ScanFamily::k54c, "T5.4c"},
    {ScanFamily::kP6, "P6"},
}};

enum class Shape { kNonDecreasing, kStrict, kAtLeastOne };

class Checker {
 public:
  explicit Checker(ScanReport& report) : report_(report) {}

  // Walks x(first..last) and records the first violation of `shape`.
  void run(std::int64_t first, std::int64_t last, const std::function<Rational(std::int64_t)>& x, Shape shape,
           const std::string& label) {
    if (report_.violation) return;
    std::optional<Rational> prev;
    for (std::int64_t t = first; t <= last; ++t) {
      Rational cur = x(t);
      ++report_.comparisons;
      bool ok = true;
      if (shape == Shape::kAtLeastOne) {
        ok = cur >= 1;
      } else if (prev) {
        ok = shape == Shape::kStrict ? cur > *prev : cur >= *prev;
      }
      if (!ok) {
        report_.violation = label + " at " + std::to_string(t) + ": " + to_string(cur) +
                            (prev && shape != Shape::kAtLeastOne ? " after " + to_string(*prev) : "");
        return;
      }
      prev = cur;
    }
  }

 private:
  ScanReport& report_;
};

void check_nonnegative_integral(const TruncatedSeries& f) {
  for (std::size_t j = 0; j <= f.order(); ++j) {
    if (!is_integer(f[j]) || f[j] < 0) {
      throw PreconditionError("f in Z>=0[[z]]", "coefficient of z^" + std::to_string(j) + " is " + to_string(f[j]));
    }
  }
}

}  // namespace

std::string scan_family_name(ScanFamily family) {
  for (const auto& [key, name] : kNames) {
    if (key == family) return name;
  }
  return "?";
}

ScanFamily parse_scan_family(const std::string& text) {
  for (const auto& [key, name] : kNames) {
    if (text == name) return key;
  }
  throw UsageError("unknown scan family '" + text + "'");
}

std::int64_t necklace_start(std::int64_t c) { return c <= 3 ? 2 : 1; }

ScanReport monotonicity_scan(const TruncatedSeries& f, ScanFamily family, const ScanBounds& bounds) {
  if (bounds.rmax < 1 || bounds.kmax < 0) throw UsageError("scan: need rmax >= 1 and kmax >= 0");
  ScanReport report{family, bounds, false, 0, std::nullopt};
  Checker check(report);

  if (family == ScanFamily::kP6) {
    if (bounds.cmax < 2) throw UsageError("scan: P6 needs cmax >= 2");
    for (std::int64_t c = 2; c <= bounds.cmax; ++c) {
      check.run(necklace_start(c), bounds.rmax, [c](std::int64_t r) { return Rational(necklace_poly(c, r)); },
                Shape::kStrict, "M(" + std::to_string(c) + ";r) in r");
    }
    for (std::int64_t r = 1; r <= bounds.rmax; ++r) {
      check.run(1, bounds.cmax, [r](std::int64_t c) { return Rational(necklace_poly(c, r)); }, Shape::kStrict,
                "M(c;" + std::to_string(r) + ") in c");
    }
    report.pass = !report.violation;
    return report;
  }

  check_nonnegative_integral(f);
  if (f[0] <= 0) throw PreconditionError("a_0 > 0", "constant term is " + to_string(f[0]));
  const bool parts34 = family != ScanFamily::k51 && family != ScanFamily::k52;
  if (parts34) {
    for (std::size_t j = 1; j <= f.order(); ++j) {
      if (f[j] < f[j - 1]) {
        throw PreconditionError("a_j non-decreasing", "a_" + std::to_string(j) + " = " + to_string(f[j]) +
                                                          " < a_" + std::to_string(j - 1) + " = " +
                                                          to_string(f[j - 1]));
      }
    }
  }
  const auto kmax = static_cast<std::size_t>(bounds.kmax);
  if (kmax > f.order()) {
    throw UsageError("scan: kmax " + std::to_string(kmax) + " exceeds the truncation order " +
                     std::to_string(f.order()));
  }

  const bool negated = family == ScanFamily::k52 || family == ScanFamily::k54a || family == ScanFamily::k54b ||
                       family == ScanFamily::k54c;
  const WittTable table = witt_table(negated ? ps_neg(f) : f, bounds.rmax, kmax);
  // x(k, r) = m_f(k, r) or (-1)^r m_{-f}(k, r).
  auto x = [&](std::int64_t k, std::int64_t r) {
    Rational v = table.at(static_cast<std::size_t>(k), r);
    return negated && r % 2 == 1 ? Rational(-v) : v;
  };

  switch (family) {
    case ScanFamily::k51:
    case ScanFamily::k52:
      for (std::int64_t k = family == ScanFamily::k51 ? 2 : 3; k <= bounds.kmax; ++k) {
        check.run(1, bounds.rmax, [&, k](std::int64_t r) { return x(k, r); }, Shape::kNonDecreasing,
                  "k = " + std::to_string(k) + ", r");
      }
      break;
    case ScanFamily::k53a:
    case ScanFamily::k54a:
      // m_f(0, r) = M(a_0; r) vanishes for a_0 = 1, r >= 2, so the bound is
      // scanned from k = 1.
      for (std::int64_t r = 1; r <= bounds.rmax; ++r) {
        check.run(1, bounds.kmax, [&, r](std::int64_t k) { return x(k, r); }, Shape::kAtLeastOne,
                  "r = " + std::to_string(r) + ", k");
      }
      break;
    case ScanFamily::k53b:
    case ScanFamily::k54b:
      for (std::int64_t r = 1; r <= bounds.rmax; ++r) {
        check.run(0, bounds.kmax, [&, r](std::int64_t k) { return x(k, r); }, Shape::kNonDecreasing,
                  "r = " + std::to_string(r) + ", k");
      }
      break;
    case ScanFamily::k53c:
    case ScanFamily::k54c:
      for (std::int64_t r = 3; r <= bounds.rmax; ++r) {
        check.run(2, bounds.kmax, [&, r](std::int64_t k) { return x(k, r); }, Shape::kStrict,
                  "r = " + std::to_string(r) + ", k");
      }
      break;
    case ScanFamily::kP6:
      break;
  }
  report.pass = !report.violation;
  return report;
}

}  // namespace wittkit
