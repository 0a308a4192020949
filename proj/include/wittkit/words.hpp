#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "wittkit/arith.hpp"
#include "wittkit/necklace.hpp"

namespace wittkit {

// Letters are 1..r, ordered as integers.
using Word = std::vector<int>;

inline constexpr std::uint64_t kDefaultWordBudget = 14;

// True iff w is strictly smaller than each of its proper rotations.
bool is_lyndon(const Word& w);

// Minimal period of w read as a circular word (a divisor of |w|).
std::size_t minimal_period(const Word& w);

// Duval's generator: calls `visit` for every Lyndon word of length <= max_len
// over letters 1..alphabet, in increasing lexicographic order.
void for_each_lyndon_word(std::size_t max_len, int alphabet,
                          const std::function<void(const Word&)>& visit);

// Lyndon words of length max_len over letters 1..alphabet, bucketed by
// content (a composition of size `alphabet`).
std::map<Composition, std::vector<Word>> lyndon_words_by_content(std::size_t length, int alphabet);

// All Lyndon words with the given letter multiplicities, lexicographically
// ordered. Generated by Duval's algorithm and filtered by content.
std::vector<Word> lyndon_words(const Composition& content, std::uint64_t budget = kDefaultWordBudget);

// The same list from an exhaustive scan of all words of that length; kept as
// an independent second oracle for short lengths (<= 10 by default).
std::vector<Word> lyndon_words_naive(const Composition& content, std::uint64_t budget = 10);

// Number of rotation classes of words with the given content whose minimal
// period is the full length; counted by enumerating every arrangement of the
// multiset. Throws ResourceError if the total exceeds `budget`.
Integer aperiodic_count(const Composition& content, std::uint64_t budget = kDefaultWordBudget);

}  // namespace wittkit
