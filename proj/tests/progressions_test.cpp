#include <optional>

#include "doctest.h"
#include "thuelab/errors.hpp"
#include "thuelab/rng.hpp"
#include "thuelab/words/progressions.hpp"
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

bool inside(std::size_t pos, std::size_t lo, std::size_t len) {
  return pos >= lo && pos < lo + len;
}

std::optional<APWitness> brute_rainbow(const Word& w, std::size_t lo, std::size_t len,
                                       std::size_t r, int k) {
  for (std::size_t s = lo; inside(s, lo, len); ++s) {
    if (!inside(s + std::size_t(k - 1) * r, lo, len)) break;
    bool distinct = true;
    for (int i = 0; distinct && i < k; ++i)
      for (int j = i + 1; distinct && j < k; ++j)
        distinct = w[s + i * r] != w[s + j * r];
    if (distinct) return APWitness{s, r, k, APKind::rainbow};
  }
  return std::nullopt;
}

// A term at an odd 1-based position must differ from every earlier term.
bool brute_progression_ok(const Word& w, std::size_t base, std::size_t r, int k) {
  for (int j = 1; j < k; ++j) {
    if ((base + std::size_t(j) * r + 1) % 2 == 0) continue;
    for (int i = 0; i < j; ++i)
      if (w[base + std::size_t(i) * r] == w[base + std::size_t(j) * r]) return false;
  }
  return true;
}

std::optional<APWitness> brute_prismatic(const Word& w, std::size_t lo, std::size_t len,
                                         std::size_t r, int k) {
  for (std::size_t s = lo; inside(s, lo, len); ++s) {
    if (!inside(s + 1 + std::size_t(k - 1) * r, lo, len)) break;
    if (brute_progression_ok(w, s, r, k) && brute_progression_ok(w, s + 1, r, k))
      return APWitness{s, r, k, APKind::prismatic};
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("rainbow progression goldens") {
  CHECK(find_rainbow_ap(Word::from_digits("012", 3), 0, 3, 1, 3) ==
        APWitness{0, 1, 3, APKind::rainbow});
  CHECK(find_rainbow_ap(Word::from_digits("001122", 3), 0, 6, 2, 3) ==
        APWitness{0, 2, 3, APKind::rainbow});
  CHECK(find_rainbow_ap(Word::from_digits("000", 2), 0, 3, 1, 2) == std::nullopt);
  CHECK(find_rainbow_ap(Word::from_digits("000", 2), 0, 3, 1, 1) ==
        APWitness{0, 1, 1, APKind::rainbow});
  CHECK(find_rainbow_ap(Word::from_digits("012", 3), 0, 3, 2, 3) == std::nullopt);
  CHECK(find_rainbow_ap(Word::from_digits("100", 2), 1, 2, 1, 2) == std::nullopt);
  CHECK(find_rainbow_ap(Word::from_digits("100", 2), 0, 2, 1, 2) ==
        APWitness{0, 1, 2, APKind::rainbow});
}

TEST_CASE("rainbow progression argument checks") {
  const Word w = Word::from_digits("0123", 4);
  CHECK_THROWS_AS(find_rainbow_ap(w, 2, 3, 1, 2), domain_error);
  CHECK_THROWS_AS(find_rainbow_ap(w, 0, 4, 0, 2), domain_error);
  CHECK_THROWS_AS(find_rainbow_ap(w, 0, 4, 1, 0), domain_error);
}

TEST_CASE("paired progression goldens") {
  CHECK(find_prismatic_pair(Word::from_digits("00000", 2), 0, 5, 3, 2) == std::nullopt);
  CHECK(find_prismatic_pair(Word::from_digits("00001", 2), 0, 5, 3, 2) ==
        APWitness{0, 3, 2, APKind::prismatic});
  CHECK_THROWS_AS(find_prismatic_pair(Word::from_digits("0000", 2), 0, 4, 2, 2),
                  domain_error);
  CHECK_THROWS_AS(find_prismatic_pair(Word::from_digits("0000", 2), 0, 4, 1, 2),
                  domain_error);
  CHECK_THROWS_AS(find_prismatic_pair(Word::from_digits("0000", 2), 0, 9, 3, 2),
                  domain_error);
}

TEST_CASE("progression searches agree with reference scans on random words") {
  Rng rng(405);
  int rainbow_hits = 0, prismatic_hits = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_word(rng, 20 + rng.below(41), 3);
    const std::size_t lo = rng.below(5);
    const std::size_t len = w.size() - lo - rng.below(5);
    {
      const std::size_t r = 1 + rng.below(5);
      const int k = 1 + static_cast<int>(rng.below(4));
      const auto got = find_rainbow_ap(w, lo, len, r, k);
      CHECK(got == brute_rainbow(w, lo, len, r, k));
      rainbow_hits += got.has_value();
    }
    {
      const std::size_t r = 3 + 2 * rng.below(3);
      const int k = 1 + static_cast<int>(rng.below(4));
      const auto got = find_prismatic_pair(w, lo, len, r, k);
      CHECK(got == brute_prismatic(w, lo, len, r, k));
      prismatic_hits += got.has_value();
    }
  }
  // The comparison only means something if both outcomes actually occur.
  CHECK(rainbow_hits > 30);
  CHECK(prismatic_hits > 30);
}
