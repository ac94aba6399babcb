#include <algorithm>
#include <optional>
#include <vector>

#include "doctest.h"
#include "thuelab/errors.hpp"
#include "thuelab/rng.hpp"
#include "thuelab/words/generate.hpp"
#include "thuelab/words/repetition.hpp"
#include "thuelab/words/word.hpp"

using namespace thuelab;
using namespace thuelab::words;

namespace {

Word random_word(Rng& rng, std::size_t len, Symbol alphabet) {
  Word w({}, alphabet);
  for (std::size_t i = 0; i < len; ++i)
    w.push_back(static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(alphabet))));
  return w;
}

bool blocks_equal(const Word& w, std::size_t a, std::size_t b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (w[a + i] != w[b + i]) return false;
  return true;
}

// Straightforward reference scan: leftmost start, then shortest block.
std::optional<Repetition> brute_repetition(const Word& w, int k, std::size_t min_len) {
  for (std::size_t s = 0; s < w.size(); ++s)
    for (std::size_t len = min_len; s + k * len <= w.size(); ++len) {
      bool ok = true;
      for (int b = 0; ok && b + 1 < k; ++b)
        ok = blocks_equal(w, s + b * len, s + (b + 1) * len, len);
      if (ok) return Repetition{s, len, k};
    }
  return std::nullopt;
}

bool brute_has_overlap(const Word& w) {
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      for (std::size_t len = b - a + 1; b + len <= w.size(); ++len)
        if (blocks_equal(w, a, b, len)) return true;
  return false;
}

}  // namespace

TEST_CASE("repetition search goldens") {
  CHECK(find_repetition(Word::from_digits("0101", 2), 2, 1) == Repetition{0, 2, 2});
  CHECK(find_repetition(Word::from_digits("00", 2), 2, 1) == Repetition{0, 1, 2});
  CHECK(find_repetition(Word::from_digits("010101", 2), 3, 1) == Repetition{0, 2, 3});
  CHECK(find_repetition(Word::from_digits("0123", 4), 2, 1) == std::nullopt);
  CHECK(find_repetition(Word::from_digits("00100", 2), 2, 2) == std::nullopt);
  CHECK(find_repetition(Word({}, 2), 2, 1) == std::nullopt);
  CHECK_THROWS_AS(find_repetition(Word::from_digits("00", 2), 1, 1), domain_error);
  CHECK_THROWS_AS(find_repetition(Word::from_digits("00", 2), 2, 0), domain_error);
}

TEST_CASE("a k-block repetition decomposes into adjacent pair witnesses") {
  const auto pairs = Repetition{4, 3, 3}.pair_witnesses();
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == RepetitionWitness{4, 7, 3});
  CHECK(pairs[1] == RepetitionWitness{7, 10, 3});
  CHECK(Repetition{0, 5, 2}.pair_witnesses().size() == 1);
}

TEST_CASE("repetition search agrees with a reference scan on random words") {
  Rng rng(401);
  for (int trial = 0; trial < 600; ++trial) {
    const Symbol c = 2 + static_cast<Symbol>(rng.below(2));
    const Word w = random_word(rng, 1 + rng.below(40), c);
    for (int k : {2, 3}) {
      const auto got = find_repetition(w, k, 1);
      const auto want = brute_repetition(w, k, 1);
      CHECK(got == want);
    }
    CHECK(find_repetition(w, 2, 2) == brute_repetition(w, 2, 2));
  }
}

TEST_CASE("overlap detection goldens") {
  CHECK(is_overlap_free(Word::from_digits("00", 2)) == std::nullopt);
  CHECK(is_overlap_free(Word::from_digits("000", 2)) == RepetitionWitness{0, 1, 2});
  CHECK(is_overlap_free(Word::from_digits("01010", 2)) == RepetitionWitness{0, 2, 3});
  CHECK(is_overlap_free(thue_morse(8)) == std::nullopt);
}

TEST_CASE("overlap detection agrees with a reference scan on random words") {
  Rng rng(402);
  for (int trial = 0; trial < 400; ++trial) {
    const Word w = random_word(rng, 1 + rng.below(30), 2);
    const auto got = is_overlap_free(w);
    CHECK(got.has_value() == brute_has_overlap(w));
    if (!got) continue;
    // The witness must be a genuine overlapping identical pair, leftmost first.
    const auto& wit = *got;
    CHECK(wit.start_second > wit.start_first);
    CHECK(wit.start_second - wit.start_first < wit.block_len);
    CHECK(wit.start_second + wit.block_len <= w.size());
    CHECK(blocks_equal(w, wit.start_first, wit.start_second, wit.block_len));
    std::size_t min_start = w.size(), min_len_at_start = w.size();
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t b = a + 1; b < w.size(); ++b)
        for (std::size_t len = b - a + 1; b + len <= w.size(); ++len)
          if (blocks_equal(w, a, b, len)) {
            if (a < min_start) {
              min_start = a;
              min_len_at_start = len;
            } else if (a == min_start) {
              min_len_at_start = std::min(min_len_at_start, len);
            }
          }
    CHECK(wit.start_first == min_start);
    CHECK(wit.block_len == min_len_at_start);
  }
}

TEST_CASE("separation check uses a strict distance bound") {
  const Word w = Word::from_digits("0101", 2);
  auto exact = check_separation(w, 1, [](std::size_t) { return 2.0; });
  CHECK(exact.empty());
  auto above = check_separation(w, 1, [](std::size_t) { return 2.5; });
  REQUIRE(above.size() == 1);
  CHECK(above[0] == RepetitionWitness{0, 2, 2});
}

TEST_CASE("separation check honors the minimum length and trivial bounds") {
  const Word w = Word::from_digits("0000", 2);
  CHECK(check_separation(w, 3, [](std::size_t) { return 100.0; }).empty());
  CHECK(check_separation(w, 0, [](std::size_t) { return 1.0; }).empty());
  auto hits = check_separation(w, 0, [](std::size_t n) { return n == 1 ? 10.0 : 0.0; });
  // Identical 1-blocks at distances 1, 2, 3: six ordered pairs in total.
  CHECK(hits.size() == 6);
  for (const auto& h : hits) {
    CHECK(h.block_len == 1);
    CHECK(blocks_equal(w, h.start_first, h.start_second, 1));
  }
}

TEST_CASE("words one past the block-count pigeonhole always violate separation") {
  // A binary word of length 2^n + n has 2^n + 1 blocks of length n, so two are
  // identical at start distance at most 2^n, inside any bound above 2^n.
  Rng rng(403);
  const std::size_t n = 3;
  const auto f = [&](std::size_t m) { return m == n ? double(1 << n) + 1 : 0.0; };
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, (std::size_t{1} << n) + n, 2);
    const auto bad = check_separation(w, n - 1, f);
    CHECK(!bad.empty());
    for (const auto& h : bad) {
      CHECK(h.block_len == n);
      CHECK(h.start_second - h.start_first < (std::size_t{1} << n) + 1);
      CHECK(blocks_equal(w, h.start_first, h.start_second, n));
    }
  }
}

TEST_CASE("adjacent block difference counts mismatches") {
  const Word w = Word::from_digits("0110", 2);
  CHECK(adjacent_difference(w, 2, 0) == 2);
  CHECK(adjacent_difference(Word::from_digits("0101", 2), 2, 0) == 0);
  CHECK(adjacent_difference(w, 1, 1) == 0);
  CHECK_THROWS_AS(adjacent_difference(w, 2, 1), domain_error);
  CHECK_THROWS_AS(adjacent_difference(w, 3, 0), domain_error);
}
