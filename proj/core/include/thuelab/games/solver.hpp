#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "thuelab/games/game.hpp"

namespace thuelab::games {

inline constexpr std::uint64_t kDefaultSolverBudget = 400'000'000;

/// Move table keyed by canonicalized (suffix, move-index) state; values are
/// moves in canonical labels and are mapped back through the observed-state
/// relabeling on replay.
class StrategyTable {
public:
  void insert(const std::string& key, Symbol move);
  std::optional<Symbol> lookup(const std::string& key) const;
  std::size_t size() const { return table_.size(); }

  /// Binary format: magic, entry count, then length-prefixed key and one move byte.
  void write(std::ostream& out) const;
  static StrategyTable read(std::istream& in);

  std::string digest() const;
  const std::map<std::string, Symbol>& entries() const { return table_; }

private:
  std::map<std::string, Symbol> table_;
};

struct SolveResult {
  std::size_t value = 0;           // last move index Player 1 can force loss-free
  bool loss_forced = false;        // false when value == horizon (no loss within it)
  std::size_t first_loss = 0;      // value + 1 when loss_forced
  std::uint64_t nodes_explored = 0;
  StrategyTable table;
};

/// Exact survival value under optimal play: the largest m ≤ horizon such that
/// Player 1 can force the word after m moves to contain no loss witness. With
/// fixed_p2 set, Player 2's moves follow that strategy instead of minimizing
/// (the strategy must be deterministic and never use lookahead).
///
/// Memoizes on the canonicalized relevant suffix; exceeding `budget` nodes
/// raises budget_error whose best_proven field holds the largest m already
/// proven reachable.
SolveResult solve_survival(const GameConfig& config, const LossCondition& loss,
                           std::uint64_t budget = kDefaultSolverBudget,
                           const Strategy* fixed_p2 = nullptr);

/// Wraps an extracted table for replay; positions with no table entry raise
/// domain_error (they are unreachable under the table against any opponent).
Strategy strategy_from_table(const StrategyTable& table, const GameConfig& config,
                             const LossCondition& loss);

}  // namespace thuelab::games
