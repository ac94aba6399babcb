#include "thuelab/games/montecarlo.hpp"

#include <algorithm>
#include <memory>

#include "thuelab/errors.hpp"
#include "thuelab/rng.hpp"

namespace thuelab::games {

namespace {

std::size_t witness_block_len(const LossWitness& w) {
  if (const auto* rep = std::get_if<words::Repetition>(&w)) return rep->block_len;
  return std::get<words::RepetitionWitness>(w).block_len;
}

}  // namespace

MonteCarloStats monte_carlo(const GameConfig& config, const AdversaryFactory& adversary,
                            const LossCondition& loss, std::uint64_t trials,
                            std::uint64_t seed) {
  config.validate();

  MonteCarloStats stats;
  stats.trials = trials;
  if (trials == 0) return stats;
  stats.min_survival = config.horizon;

  std::uint64_t sum_survival = 0;
  std::uint64_t seed_state = seed;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t p1_seed = splitmix64(seed_state);
    const std::uint64_t adv_seed = splitmix64(seed_state);

    auto p1_rng = std::make_shared<Rng>(p1_seed);
    Strategy p1("random-p1", [p1_rng](const MoveContext& ctx) {
      const auto alphabet = ctx.config.alphabet_of(true);
      return alphabet[p1_rng->below(alphabet.size())];
    });

    const Transcript tr = play(config, p1, adversary(adv_seed), loss);
    const std::size_t survival = tr.loss ? tr.first_loss_move - 1 : config.horizon;
    sum_survival += survival;
    stats.min_survival = std::min(stats.min_survival, survival);
    stats.max_survival = std::max(stats.max_survival, survival);
    if (tr.loss) {
      ++stats.losses;
      ++stats.witness_block_lengths[witness_block_len(*tr.loss)];
    }
  }
  stats.loss_frequency = static_cast<double>(stats.losses) / static_cast<double>(trials);
  stats.mean_survival = static_cast<double>(sum_survival) / static_cast<double>(trials);
  return stats;
}

}  // namespace thuelab::games
