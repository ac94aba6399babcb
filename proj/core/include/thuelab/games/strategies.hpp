#pragma once

#include <cstdint>

#include "thuelab/games/game.hpp"

namespace thuelab::games {

inline constexpr std::uint64_t kDefaultFourAryBudget = 20'000'000;

/// Uniform draw from the mover's alphabet each turn.
Strategy strategy_random(std::uint64_t seed);

/// Always the given symbol.
Strategy strategy_constant(Symbol s);

/// Repeats the last symbol played (0 when none). Under a lookahead opponent this
/// is evaluated one move early, so it sees its own previous move, not the mover's.
Strategy strategy_copycat();

/// Player 2 answer (a+1) mod 3 to Player 1's a; requires c = 3, t = 1.
Strategy strategy_mimic_plus_one();

/// Lexicographically least 4-ary word of length n in which any two identical
/// blocks are separated by a gap of ≥ 2 symbols (end of first to start of
/// second), found by backtracking. Throws budget_error if the search exceeds
/// `budget` nodes; Thue's construction guarantees success for n ≤ 2000.
Word four_ary_separated(std::size_t n, std::uint64_t budget = kDefaultFourAryBudget);

/// Player 1 over c = 16 viewed as pairs (a, b) = 4a + b, using lookahead. Forces
/// the derived sequence alpha_j = a_j - b_{j-1} (mod 4) to equal a 4-ary base
/// word with separation ≥ 2, which rules out squares of blocks of length ≥ 2.
/// Each word position consumes one base entry, so base_len + 1 bounds the
/// supported game length.
Strategy strategy_lookahead_16(std::size_t base_len = 2048,
                               std::uint64_t budget = kDefaultFourAryBudget);

/// Player 1 over c = 48 = 3 classes x 16 pairs: the pair part runs the 16-ary
/// construction, the class part differs from both neighbors, so transcripts
/// contain no square of any block length ≥ 1.
Strategy strategy_lookahead_48(std::size_t base_len = 2048,
                               std::uint64_t budget = kDefaultFourAryBudget);

/// The 4-ary base word shared by the lookahead strategies (cached per length).
const Word& lookahead_base(std::size_t base_len, std::uint64_t budget);

}  // namespace thuelab::games
