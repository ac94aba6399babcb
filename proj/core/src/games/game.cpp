#include "thuelab/games/game.hpp"

#include <algorithm>
#include <cmath>

#include "thuelab/errors.hpp"

namespace thuelab::games {

using thuelab::domain_error;

void GameConfig::validate() const {
  if (alphabet_size < 2) throw domain_error("game needs an alphabet of ≥ 2 symbols");
  if (bias < 1) throw domain_error("bias t must be ≥ 1");
  for (const auto* alpha : {&player1_alphabet, &player2_alphabet}) {
    for (Symbol s : *alpha)
      if (s < 0 || s >= alphabet_size)
        throw domain_error("restricted alphabet contains out-of-range symbol " +
                           std::to_string(s));
  }
}

std::vector<Symbol> GameConfig::alphabet_of(bool player1) const {
  const auto& restricted = player1 ? player1_alphabet : player2_alphabet;
  if (!restricted.empty()) return restricted;
  std::vector<Symbol> full(alphabet_size);
  for (Symbol s = 0; s < alphabet_size; ++s) full[s] = s;
  return full;
}

bool GameConfig::symbol_allowed(bool player1, Symbol s) const {
  if (s < 0 || s >= alphabet_size) return false;
  const auto& restricted = player1 ? player1_alphabet : player2_alphabet;
  return restricted.empty() ||
         std::find(restricted.begin(), restricted.end(), s) != restricted.end();
}

LossCondition LossCondition::repetition(int k_blocks, std::size_t min_block_len) {
  if (k_blocks < 2) throw domain_error("k_blocks must be ≥ 2");
  if (min_block_len < 1) throw domain_error("min_block_len must be ≥ 1");
  LossCondition c;
  c.kind_ = Kind::repetition;
  c.k_blocks_ = k_blocks;
  c.min_block_len_ = min_block_len;
  c.description_ = (k_blocks == 2 ? "square-min" + std::to_string(min_block_len)
                                  : "rep" + std::to_string(k_blocks) + "-min" +
                                        std::to_string(min_block_len));
  return c;
}

LossCondition LossCondition::repetition_total(int k_blocks, std::size_t min_total) {
  if (k_blocks < 2) throw domain_error("k_blocks must be ≥ 2");
  if (min_total < 1) throw domain_error("min_total must be ≥ 1");
  LossCondition c;
  c.kind_ = Kind::repetition_total;
  c.k_blocks_ = k_blocks;
  c.min_total_ = min_total;
  c.min_block_len_ =
      std::max<std::size_t>(1, (min_total + k_blocks - 1) / static_cast<std::size_t>(k_blocks));
  c.description_ =
      "rep" + std::to_string(k_blocks) + "-total" + std::to_string(min_total);
  return c;
}

LossCondition LossCondition::separation(std::size_t min_len,
                                        std::function<double(std::size_t)> f,
                                        std::string f_description) {
  LossCondition c;
  c.kind_ = Kind::separation;
  c.min_len_ = min_len;
  c.f_ = std::move(f);
  c.description_ = "sep-min" + std::to_string(min_len) + "-" + std::move(f_description);
  return c;
}

std::optional<LossWitness> LossCondition::witness_ending_at(const Word& w,
                                                            std::size_t end) const {
  if (end > w.size() || end == 0) return std::nullopt;
  if (kind_ == Kind::separation) {
    for (std::size_t len = min_len_ + 1; len <= end; ++len) {
      const double bound = f_(len);
      const std::size_t second = end - len;
      for (std::size_t dist = 1; dist <= second; ++dist) {
        if (static_cast<double>(dist) >= bound) break;
        const std::size_t first = second - dist;
        bool eq = true;
        for (std::size_t i = 0; eq && i < len; ++i) eq = w[first + i] == w[second + i];
        if (eq) return LossWitness{words::RepetitionWitness{first, second, len}};
      }
    }
    return std::nullopt;
  }
  const std::size_t k = static_cast<std::size_t>(k_blocks_);
  for (std::size_t len = min_block_len_; k * len <= end; ++len) {
    const std::size_t start = end - k * len;
    bool ok = true;
    for (std::size_t b = 0; ok && b + 1 < k; ++b)
      for (std::size_t i = 0; i < len; ++i)
        if (w[start + b * len + i] != w[start + (b + 1) * len + i]) {
          ok = false;
          break;
        }
    if (ok) return LossWitness{words::Repetition{start, len, k_blocks_}};
  }
  return std::nullopt;
}

std::optional<LossWitness> LossCondition::scan(const Word& w) const {
  for (std::size_t end = 1; end <= w.size(); ++end)
    if (auto wit = witness_ending_at(w, end)) return wit;
  return std::nullopt;
}

std::size_t LossCondition::relevant_suffix(std::size_t horizon) const {
  if (kind_ == Kind::separation) return horizon;
  const std::size_t k = static_cast<std::size_t>(k_blocks_);
  const std::size_t span = k * (horizon / k);
  return span == 0 ? 0 : span - 1;
}

Transcript play(const GameConfig& config, const Strategy& p1, const Strategy& p2,
                const LossCondition& loss) {
  config.validate();
  if (p2.wants_lookahead())
    throw domain_error("lookahead is supported for Player 1 only");
  if (p1.wants_lookahead() && config.bias != 1)
    throw domain_error("lookahead strategies require bias t = 1");

  Transcript tr;
  tr.config = config;
  tr.loss_description = loss.describe();
  Word w({}, config.alphabet_size);

  auto checked = [&](const Strategy& s, bool player1, const MoveContext& ctx) {
    const Symbol sym = s(ctx);
    if (!config.symbol_allowed(player1, sym))
      throw domain_error("strategy '" + s.name() + "' played symbol " +
                         std::to_string(sym) + " outside its alphabet at move " +
                         std::to_string(ctx.position));
    return sym;
  };

  std::optional<Symbol> committed;
  for (std::size_t pos = 1; pos <= config.horizon; ++pos) {
    const bool is_p1 = config.player1_moves_at(pos);
    Symbol sym;
    if (is_p1) {
      std::optional<Symbol> next;
      if (p1.wants_lookahead() && pos + 1 <= config.horizon) {
        // Player 2 commits the reply before seeing this move.
        committed = checked(p2, false, MoveContext{w, config, pos + 1, std::nullopt});
        next = committed;
      }
      sym = checked(p1, true, MoveContext{w, config, pos, next});
    } else if (committed) {
      sym = *committed;
      committed.reset();
    } else {
      sym = checked(p2, false, MoveContext{w, config, pos, std::nullopt});
    }
    w.push_back(sym);
    if (auto wit = loss.witness_ending_at(w, w.size())) {
      tr.loss = wit;
      tr.first_loss_move = pos;
      break;
    }
  }
  tr.word = std::move(w);
  return tr;
}

}  // namespace thuelab::games
