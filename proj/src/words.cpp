#include "wittkit/words.hpp"

#include <algorithm>

#include "wittkit/error.hpp"

namespace wittkit {

namespace {

void check_budget(const Composition& content, std::uint64_t budget, const char* who) {
  if (content.total() > budget) {
    throw ResourceError(std::string(who) + ": total " + std::to_string(content.total()) +
                        " exceeds enumeration budget " + std::to_string(budget));
  }
}

Composition content_of(const Word& w, std::size_t alphabet) {
  std::vector<std::uint64_t> counts(alphabet, 0);
  for (int letter : w) ++counts[static_cast<std::size_t>(letter - 1)];
  return Composition(std::move(counts));
}

}  // namespace

bool is_lyndon(const Word& w) {
  if (w.empty()) throw UsageError("is_lyndon: empty word");
  const std::size_t n = w.size();
  for (std::size_t shift = 1; shift < n; ++shift) {
    // Compare w with its rotation starting at `shift`.
    for (std::size_t i = 0; i < n; ++i) {
      int a = w[i];
      int b = w[(i + shift) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal rotation: periodic
    }
  }
  return true;
}

std::size_t minimal_period(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return p;
  }
  return n;
}

void for_each_lyndon_word(std::size_t max_len, int alphabet,
                          const std::function<void(const Word&)>& visit) {
  if (max_len == 0 || alphabet < 1) return;
  Word w{1};
  while (!w.empty()) {
    visit(w);
    // Duval: repeat w up to max_len, then increment the last non-maximal letter.
    std::size_t m = w.size();
    while (w.size() < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == alphabet) w.pop_back();
    if (!w.empty()) ++w.back();
  }
}

std::map<Composition, std::vector<Word>> lyndon_words_by_content(std::size_t length, int alphabet) {
  std::map<Composition, std::vector<Word>> buckets;
  for_each_lyndon_word(length, alphabet, [&](const Word& w) {
    if (w.size() == length) buckets[content_of(w, static_cast<std::size_t>(alphabet))].push_back(w);
  });
  return buckets;
}

std::vector<Word> lyndon_words(const Composition& content, std::uint64_t budget) {
  check_budget(content, budget, "lyndon_words");
  std::vector<Word> out;
  if (content.total() == 0) return out;
  const std::size_t n = content.total();
  const int r = static_cast<int>(content.size());
  for_each_lyndon_word(n, r, [&](const Word& w) {
    if (w.size() == n && content_of(w, content.size()) == content) out.push_back(w);
  });
  return out;
}

std::vector<Word> lyndon_words_naive(const Composition& content, std::uint64_t budget) {
  check_budget(content, budget, "lyndon_words_naive");
  std::vector<Word> out;
  const std::size_t n = content.total();
  const int r = static_cast<int>(content.size());
  if (n == 0) return out;
  Word w(n, 1);
  while (true) {
    if (content_of(w, content.size()) == content && is_lyndon(w)) out.push_back(w);
    // Odometer increment, last letter fastest: lexicographic order.
    std::size_t i = n;
    while (i > 0 && w[i - 1] == r) w[--i] = 1;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

Integer aperiodic_count(const Composition& content, std::uint64_t budget) {
  check_budget(content, budget, "aperiodic_count");
  const std::size_t n = content.total();
  if (n == 0) return 0;
  Word w;
  w.reserve(n);
  for (std::size_t i = 0; i < content.size(); ++i) w.insert(w.end(), content[i], static_cast<int>(i + 1));
  // Every aperiodic class contributes exactly n distinct arrangements.
  std::uint64_t aperiodic_words = 0;
  do {
    if (minimal_period(w) == n) ++aperiodic_words;
  } while (std::next_permutation(w.begin(), w.end()));
  if (aperiodic_words % n != 0) {
    throw MathError("aperiodic_count: rotation classes do not partition the words");
  }
  return Integer(static_cast<unsigned long>(aperiodic_words / n));
}

}  // namespace wittkit
