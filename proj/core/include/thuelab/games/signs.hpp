#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thuelab/games/game.hpp"

namespace thuelab::games {

/// Sign encoding of Player 1's choices in a c = 3, t = 1 game against the
/// (a+1) mod 3 mimic: after normalizing the first move to 0, each later Player 1
/// move is prev+1 ('+') or prev-1 ('-'); repeating prev is an immediate loss and
/// ends the encoding with '!'. The first move itself carries no sign.
std::string encode_choices(const Transcript& transcript);

/// Rebuilds the full game word from a sign string (first move 0, mimic replies).
Word decode_signs(const std::string& signs);

struct MimicAnalysis {
  std::size_t max_complete_moves = 0;     // longest loss-free full game, in moves
  std::vector<std::string> longest_signs; // sign strings achieving it
  std::uint64_t sequences_examined = 0;
};

/// Exhaustive scan of all sign strings up to max_signs: a game of s signs has
/// 2s + 2 moves (each sign is a completed Player1/Player2 round). Returns the
/// longest loss-free complete game under the square-of-blocks-≥2 loss.
MimicAnalysis analyze_mimic(std::size_t max_signs);

/// Positions of forbidden sign factors: any "--", "+-+", or "+++++" forces a
/// square within one move. Exposed for the case-analysis tests.
bool signs_forbidden(const std::string& signs);

}  // namespace thuelab::games
