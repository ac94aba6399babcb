#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thuelab/words/word.hpp"

namespace thuelab::words {

inline constexpr std::uint64_t kDefaultPatternBudget = 50'000'000;

/// Abstract pattern p_1 p_2 .. p_m over variables 0..v-1; first occurrences
/// appear in increasing variable order, so "xyx" is {0, 1, 0}.
class Pattern {
public:
  explicit Pattern(std::vector<int> variables);

  /// Builds from letters, e.g. "xyx"; variables are numbered by first occurrence.
  static Pattern parse(std::string_view letters);

  std::size_t length() const { return variables_.size(); }
  int variable_count() const { return variable_count_; }
  const std::vector<int>& variables() const { return variables_; }
  int operator[](std::size_t i) const { return variables_[i]; }

  /// Occurrence count of one variable.
  std::size_t occurrences(int variable) const;

  /// Display form using letters x, y, z, w, then a, b, ..
  std::string to_letters() const;

  bool operator==(const Pattern&) const = default;

private:
  std::vector<int> variables_;
  int variable_count_ = 0;
};

/// Partition of w[offset .. offset + sum(block_lengths)) into consecutive blocks.
struct BlockPartition {
  std::size_t offset = 0;
  std::vector<std::size_t> block_lengths;

  bool operator==(const BlockPartition&) const = default;
};

/// First partition of a subword of w into |p| consecutive blocks, each of length
/// ≥ min_block_len, where equal pattern variables get identical blocks (smallest
/// offset, then lexicographically least length vector). Absent when no subword
/// matches. Throws budget_error when the search exceeds `budget` nodes.
std::optional<BlockPartition> pattern_match(const Word& w, const Pattern& p,
                                            std::size_t min_block_len,
                                            std::uint64_t budget = kDefaultPatternBudget);

/// Exact number of ways to partition an interval of length n into |p| blocks with
/// lengths ≥ min_block_len and equal variables assigned equal lengths.
std::uint64_t count_compatible_partitions(std::size_t n, const Pattern& p,
                                          std::size_t min_block_len = 2);

/// n-th Zimin pattern: Z_1 = x, Z_{n+1} = Z_n v Z_n with a fresh variable v.
Pattern zimin(int n);

/// Z_n rendered as a word whose symbols are the variable indices (alphabet n).
Word zimin_word(int n);

/// True iff p occurs (blocks of length ≥ 1) in the Zimin word on p's variable
/// count; that containment characterizes the unavoidable patterns.
bool is_unavoidable(const Pattern& p, std::uint64_t budget = kDefaultPatternBudget);

/// True iff some variable occurs exactly once in p.
bool has_isolated_variable(const Pattern& p);

}  // namespace thuelab::words
