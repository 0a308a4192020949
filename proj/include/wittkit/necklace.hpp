#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "wittkit/arith.hpp"

namespace wittkit {

// Letter multiplicities (n_1, ..., n_r) of a word. Zero entries are allowed.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {}
  Composition(std::initializer_list<std::uint64_t> parts) : parts_(parts) {}

  const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::uint64_t operator[](std::size_t i) const { return parts_[i]; }
  std::uint64_t total() const;
  // gcd of all entries; 0 only for the all-zero composition.
  std::uint64_t gcd() const;
  // Entrywise division; d must divide every entry.
  Composition divided_by(std::uint64_t d) const;
  Composition with_appended(std::uint64_t m) const;
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<std::uint64_t> parts_;
};

// Parses "2,3,1". Throws UsageError on malformed input.
Composition parse_composition(const std::string& text);

// M(alpha; n) = (1/n) sum_{d | n} mu(n/d) alpha^d. n >= 1.
Integer necklace_poly(const Integer& alpha, std::int64_t n);

// Number of aperiodic circular words with content c (Witt dimension
// formula). Rejects the all-zero and empty composition.
Integer necklace_count(const Composition& c);

// Sign-twisted count V_k(c), 1 <= k <= c.size(), evaluated from its Möbius
// sum with t_k = n_1 + ... + n_k.
Integer v_count(const Composition& c, std::size_t k);

enum class ClosedForm { kZeroM, kOneM, kTwoM };

// Closed forms for M(0,m), M(1,m), M(2,m). M(0,m) needs m >= 1.
Integer necklace_closed(std::uint64_t m, ClosedForm which);

}  // namespace wittkit
