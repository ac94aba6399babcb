#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "thuelab/words/repetition.hpp"
#include "thuelab/words/word.hpp"

namespace thuelab::games {

using words::Symbol;
using words::Word;

/// (1:t) biased game: Player 1 owns 1-based positions p with p ≡ 1 (mod t+1),
/// Player 2 fills the t positions in between.
struct GameConfig {
  Symbol alphabet_size = 2;
  int bias = 1;  // t
  std::size_t horizon = 0;
  std::vector<Symbol> player1_alphabet;  // empty = full alphabet
  std::vector<Symbol> player2_alphabet;

  void validate() const;
  bool player1_moves_at(std::size_t position) const {  // 1-based
    return (position - 1) % static_cast<std::size_t>(bias + 1) == 0;
  }
  std::vector<Symbol> alphabet_of(bool player1) const;
  bool symbol_allowed(bool player1, Symbol s) const;
};

using LossWitness = std::variant<words::Repetition, words::RepetitionWitness>;

/// Monotone loss predicate over the growing game word.
class LossCondition {
public:
  /// k_blocks consecutive identical blocks, each of length ≥ min_block_len.
  static LossCondition repetition(int k_blocks, std::size_t min_block_len);

  /// k_blocks consecutive identical blocks whose total length is ≥ min_total.
  static LossCondition repetition_total(int k_blocks, std::size_t min_total);

  /// Identical n-blocks (n > min_len) at start distance < f(n).
  static LossCondition separation(std::size_t min_len, std::function<double(std::size_t)> f,
                                  std::string f_description);

  /// Witness whose last position is end-1, if one appeared with that extension.
  std::optional<LossWitness> witness_ending_at(const Word& w, std::size_t end) const;

  /// Full-word scan (first witness by the module's scan order).
  std::optional<LossWitness> scan(const Word& w) const;

  /// Longest block length a witness ending within `horizon` moves can involve;
  /// bounds how much suffix the solver must retain.
  std::size_t relevant_suffix(std::size_t horizon) const;

  const std::string& describe() const { return description_; }

private:
  LossCondition() = default;

  enum class Kind { repetition, repetition_total, separation };
  Kind kind_ = Kind::repetition;
  int k_blocks_ = 2;
  std::size_t min_block_len_ = 1;
  std::size_t min_total_ = 0;
  std::size_t min_len_ = 0;
  std::function<double(std::size_t)> f_;
  std::string description_;
};

/// What a strategy sees when asked for the move at `position` (1-based): the word
/// holds all previous moves. committed_next is the opponent's already-committed
/// following move and is present only for strategies with the lookahead flag.
struct MoveContext {
  const Word& word;
  const GameConfig& config;
  std::size_t position;
  std::optional<Symbol> committed_next;
};

class Strategy {
public:
  using Fn = std::function<Symbol(const MoveContext&)>;

  Strategy() = default;
  Strategy(std::string name, Fn fn, bool wants_lookahead = false)
      : name_(std::move(name)), fn_(std::move(fn)), lookahead_(wants_lookahead) {}

  const std::string& name() const { return name_; }
  bool wants_lookahead() const { return lookahead_; }
  Symbol operator()(const MoveContext& ctx) const { return fn_(ctx); }

private:
  std::string name_;
  Fn fn_;
  bool lookahead_ = false;
};

struct Transcript {
  GameConfig config;
  Word word;
  std::optional<LossWitness> loss;
  std::size_t first_loss_move = 0;  // 1-based move index; 0 = no loss
  std::string loss_description;
};

/// Runs the game until the horizon or the first loss witness. When the mover has
/// the lookahead flag (only supported at t = 1), the opponent's next move is
/// committed before the mover sees the position, and that commitment is binding.
/// A strategy emitting a symbol outside its alphabet raises domain_error naming it.
Transcript play(const GameConfig& config, const Strategy& p1, const Strategy& p2,
                const LossCondition& loss);

}  // namespace thuelab::games
