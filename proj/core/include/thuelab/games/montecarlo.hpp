#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "thuelab/games/game.hpp"

namespace thuelab::games {

struct MonteCarloStats {
  std::uint64_t trials = 0;
  std::uint64_t losses = 0;
  double loss_frequency = 0.0;
  double mean_survival = 0.0;  // moves before the first witness (horizon if none)
  std::size_t min_survival = 0;
  std::size_t max_survival = 0;
  std::map<std::size_t, std::uint64_t> witness_block_lengths;
};

/// Factory so each trial gets a fresh adversary; trial_seed is derived from the
/// master seed via splitmix64 and is distinct per trial.
using AdversaryFactory = std::function<Strategy(std::uint64_t trial_seed)>;

/// Player 1 plays independent uniform symbols from its alphabet against the
/// adversary. Bit-reproducible for a given seed; trials are independent.
MonteCarloStats monte_carlo(const GameConfig& config, const AdversaryFactory& adversary,
                            const LossCondition& loss, std::uint64_t trials,
                            std::uint64_t seed);

}  // namespace thuelab::games
