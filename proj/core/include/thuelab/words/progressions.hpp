#pragma once

#include <optional>

#include "thuelab/words/word.hpp"

namespace thuelab::words {

enum class APKind { rainbow, prismatic };

/// Arithmetic progression of positions start, start+difference, .., with `terms`
/// terms. For prismatic witnesses this is the lower progression alpha; the upper
/// progression beta is alpha shifted by +1.
struct APWitness {
  std::size_t start = 0;
  std::size_t difference = 0;
  int terms = 0;
  APKind kind = APKind::rainbow;

  bool operator==(const APWitness&) const = default;
};

/// First k-term progression of difference r inside [ival_start, ival_start+ival_len)
/// whose colors are pairwise distinct, or absent after scanning every start.
std::optional<APWitness> find_rainbow_ap(const Word& w, std::size_t ival_start,
                                         std::size_t ival_len, std::size_t r, int k);

/// First prismatic pair (alpha, beta = alpha+1) of k-term progressions of odd
/// difference r ≥ 3 inside the interval, or absent. The distinctness rule uses
/// 1-based positions: colors at alpha_i and alpha_j (i < j) must differ whenever
/// position alpha_j + 1 is odd, and likewise along beta.
std::optional<APWitness> find_prismatic_pair(const Word& w, std::size_t ival_start,
                                             std::size_t ival_len, std::size_t r, int k);

}  // namespace thuelab::words
