#include "thuelab/words/repetition.hpp"

#include <cmath>

#include "thuelab/errors.hpp"

namespace thuelab::words {

namespace {

bool blocks_equal(const Word& w, std::size_t a, std::size_t b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (w[a + i] != w[b + i]) return false;
  return true;
}

}  // namespace

std::vector<RepetitionWitness> Repetition::pair_witnesses() const {
  std::vector<RepetitionWitness> out;
  for (int i = 0; i + 1 < blocks; ++i)
    out.push_back({start + i * block_len, start + (i + 1) * block_len, block_len});
  return out;
}

std::optional<Repetition> find_repetition(const Word& w, int k_blocks,
                                          std::size_t min_block_len) {
  if (k_blocks < 2) throw domain_error("k_blocks must be ≥ 2");
  if (min_block_len < 1) throw domain_error("min_block_len must be ≥ 1");
  const std::size_t n = w.size();
  const std::size_t k = static_cast<std::size_t>(k_blocks);
  for (std::size_t s = 0; s + k * min_block_len <= n; ++s) {
    for (std::size_t len = min_block_len; s + k * len <= n; ++len) {
      bool ok = true;
      for (std::size_t b = 0; ok && b + 1 < k; ++b)
        ok = blocks_equal(w, s + b * len, s + (b + 1) * len, len);
      if (ok) return Repetition{s, len, k_blocks};
    }
  }
  return std::nullopt;
}

std::optional<RepetitionWitness> is_overlap_free(const Word& w) {
  const std::size_t n = w.size();
  std::optional<RepetitionWitness> best;
  // Two overlapping identical intervals at offset d exist iff w[x] = w[x+d] holds
  // on d+1 consecutive positions; the first such run per offset is the leftmost.
  for (std::size_t d = 1; d < n; ++d) {
    std::size_t run = 0;
    const std::size_t xmax = best ? std::min(n - d, best->start_first + 2 * d) : n - d;
    for (std::size_t x = 0; x < xmax; ++x) {
      if (w[x] == w[x + d]) {
        if (++run == d + 1) {
          const std::size_t start = x - d;
          if (!best || start < best->start_first)
            best = RepetitionWitness{start, start + d, d + 1};
          break;
        }
      } else {
        run = 0;
      }
    }
  }
  return best;
}

std::vector<RepetitionWitness> check_separation(
    const Word& w, std::size_t min_len, const std::function<double(std::size_t)>& f) {
  const std::size_t n = w.size();
  std::vector<RepetitionWitness> bad;
  for (std::size_t len = min_len + 1; len + 1 <= n; ++len) {
    const double bound = f(len);
    if (!(bound > 1.0)) continue;  // distance ≥ 1 always holds
    for (std::size_t second = 1; second + len <= n; ++second) {
      for (std::size_t dist = 1; dist <= second; ++dist) {
        if (static_cast<double>(dist) >= bound) break;
        const std::size_t first = second - dist;
        if (blocks_equal(w, first, second, len))
          bad.push_back({first, second, len});
      }
    }
  }
  return bad;
}

std::size_t adjacent_difference(const Word& w, std::size_t n, std::size_t k) {
  if (k + 2 * n > w.size() || k + 2 * n < k)
    throw domain_error("adjacent blocks out of range");
  std::size_t diff = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (w[k + j] != w[k + n + j]) ++diff;
  return diff;
}

}  // namespace thuelab::words
