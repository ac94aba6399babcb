#include <memory>
#include <set>
#include <vector>

#include "doctest.h"
#include "thuelab/games/game.hpp"
#include "thuelab/games/montecarlo.hpp"
#include "thuelab/games/strategies.hpp"

using namespace thuelab;
using namespace thuelab::games;

TEST_CASE("identical seeds give identical statistics") {
  const GameConfig cfg{3, 1, 25, {}, {}};
  const auto loss = LossCondition::repetition(2, 1);
  const AdversaryFactory factory = [](std::uint64_t seed) { return strategy_random(seed); };
  const auto a = monte_carlo(cfg, factory, loss, 300, 42);
  const auto b = monte_carlo(cfg, factory, loss, 300, 42);
  CHECK(a.trials == b.trials);
  CHECK(a.losses == b.losses);
  CHECK(a.loss_frequency == b.loss_frequency);
  CHECK(a.mean_survival == b.mean_survival);
  CHECK(a.min_survival == b.min_survival);
  CHECK(a.max_survival == b.max_survival);
  CHECK(a.witness_block_lengths == b.witness_block_lengths);
}

TEST_CASE("zero trials yield an all-zero report") {
  const GameConfig cfg{3, 1, 25, {}, {}};
  const auto stats = monte_carlo(
      cfg, [](std::uint64_t seed) { return strategy_random(seed); },
      LossCondition::repetition(2, 1), 0, 7);
  CHECK(stats.trials == 0);
  CHECK(stats.losses == 0);
  CHECK(stats.loss_frequency == 0.0);
  CHECK(stats.mean_survival == 0.0);
  CHECK(stats.min_survival == 0);
  CHECK(stats.max_survival == 0);
  CHECK(stats.witness_block_lengths.empty());
}

TEST_CASE("an echoing adversary loses every trial on move two") {
  const GameConfig cfg{2, 1, 20, {}, {}};
  const auto stats = monte_carlo(
      cfg, [](std::uint64_t) { return strategy_copycat(); },
      LossCondition::repetition(2, 1), 250, 9);
  CHECK(stats.losses == 250);
  CHECK(stats.loss_frequency == 1.0);
  CHECK(stats.mean_survival == 1.0);
  CHECK(stats.min_survival == 1);
  CHECK(stats.max_survival == 1);
  REQUIRE(stats.witness_block_lengths.count(1) == 1);
  CHECK(stats.witness_block_lengths.at(1) == 250);
}

TEST_CASE("aggregate statistics are internally consistent") {
  const GameConfig cfg{2, 1, 30, {}, {}};
  const auto stats = monte_carlo(
      cfg, [](std::uint64_t) { return strategy_constant(0); },
      LossCondition::repetition(2, 2), 500, 12);
  CHECK(stats.trials == 500);
  CHECK(stats.loss_frequency ==
        static_cast<double>(stats.losses) / static_cast<double>(stats.trials));
  CHECK(stats.min_survival <= stats.max_survival);
  CHECK(static_cast<double>(stats.min_survival) <= stats.mean_survival);
  CHECK(stats.mean_survival <= static_cast<double>(stats.max_survival));
  CHECK(stats.max_survival <= cfg.horizon);
  std::uint64_t histogram_total = 0;
  for (const auto& [len, count] : stats.witness_block_lengths) {
    CHECK(len >= 2);  // the loss ignores single-symbol blocks
    histogram_total += count;
  }
  CHECK(histogram_total == stats.losses);
  CHECK(stats.losses > 0);  // a constant adversary hands out squares routinely
}

TEST_CASE("each trial receives a distinct adversary seed") {
  auto seeds = std::make_shared<std::vector<std::uint64_t>>();
  const GameConfig cfg{2, 1, 4, {}, {}};
  monte_carlo(
      cfg,
      [seeds](std::uint64_t seed) {
        seeds->push_back(seed);
        return strategy_constant(0);
      },
      LossCondition::repetition(2, 1), 64, 3);
  CHECK(seeds->size() == 64);
  CHECK(std::set<std::uint64_t>(seeds->begin(), seeds->end()).size() == 64);
}
