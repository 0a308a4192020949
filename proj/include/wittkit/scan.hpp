#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wittkit/series.hpp"

namespace wittkit {

// Monotonicity families. Parts 1-2 need f(0) > 0; parts 3a-4c also need the
// stored coefficients of f to be non-decreasing. P6 ignores f and scans the
// necklace polynomial M(c; r).
enum class ScanFamily { k51, k52, k53a, k53b, k53c, k54a, k54b, k54c, kP6 };

std::string scan_family_name(ScanFamily family);
ScanFamily parse_scan_family(const std::string& text);

struct ScanBounds {
  std::int64_t kmax = 10;
  std::int64_t rmax = 12;
  std::int64_t cmax = 6;
};

struct ScanReport {
  ScanFamily family;
  ScanBounds bounds;
  bool pass = false;
  std::size_t comparisons = 0;
  std::optional<std::string> violation;
};

// Checks the family's claim on the finite window 1 <= r <= rmax,
// 0 <= k <= kmax (2 <= c <= cmax for P6). Throws PreconditionError naming the
// failed hypothesis; the window needs kmax <= order of f.
ScanReport monotonicity_scan(const TruncatedSeries& f, ScanFamily family, const ScanBounds& bounds);

// beta(2) = beta(3) = 2, beta(c) = 1 for c >= 4.
std::int64_t necklace_start(std::int64_t c);

}  // namespace wittkit
