#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "thuelab/words/word.hpp"

namespace thuelab::words {

/// Two identical blocks w[start_first .. +block_len) = w[start_second .. +block_len),
/// start_first < start_second. Distance between the blocks is start_second - start_first
/// (difference of start indices), so overlapping occurrences are distances < block_len.
struct RepetitionWitness {
  std::size_t start_first = 0;
  std::size_t start_second = 0;
  std::size_t block_len = 0;

  bool operator==(const RepetitionWitness&) const = default;
};

/// blocks consecutive identical blocks of length block_len starting at start.
struct Repetition {
  std::size_t start = 0;
  std::size_t block_len = 0;
  int blocks = 0;

  /// The blocks-1 adjacent pairs as two-block witnesses.
  std::vector<RepetitionWitness> pair_witnesses() const;

  bool operator==(const Repetition&) const = default;
};

/// Leftmost occurrence of k_blocks consecutive identical blocks of common length
/// ≥ min_block_len (smallest start, then smallest block length), or absent.
/// k_blocks = 2, min_block_len = 1 is the square check.
std::optional<Repetition> find_repetition(const Word& w, int k_blocks,
                                          std::size_t min_block_len);

/// First witness of two identical overlapping intervals (smallest start, then
/// smallest length), or absent iff w is overlap-free.
std::optional<RepetitionWitness> is_overlap_free(const Word& w);

/// All pairs of identical n-blocks with n > min_len whose start distance violates
/// the separation bound: start_second - start_first < f(n). Empty means w keeps
/// every pair of long identical blocks at distance ≥ f(n).
std::vector<RepetitionWitness> check_separation(
    const Word& w, std::size_t min_len, const std::function<double(std::size_t)>& f);

/// Hamming distance between the adjacent blocks w[k .. k+n) and w[k+n .. k+2n).
/// Throws domain_error when k + 2n exceeds the word.
std::size_t adjacent_difference(const Word& w, std::size_t n, std::size_t k);

}  // namespace thuelab::words
