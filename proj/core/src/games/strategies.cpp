#include "thuelab/games/strategies.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "thuelab/errors.hpp"
#include "thuelab/rng.hpp"

namespace thuelab::games {

using thuelab::budget_error;
using thuelab::domain_error;

Strategy strategy_random(std::uint64_t seed) {
  auto rng = std::make_shared<Rng>(seed);
  return Strategy("random", [rng](const MoveContext& ctx) {
    const bool is_p1 = ctx.config.player1_moves_at(ctx.position);
    const auto alphabet = ctx.config.alphabet_of(is_p1);
    return alphabet[rng->below(alphabet.size())];
  });
}

Strategy strategy_constant(Symbol s) {
  return Strategy("constant-" + std::to_string(s),
                  [s](const MoveContext&) { return s; });
}

Strategy strategy_copycat() {
  return Strategy("copycat", [](const MoveContext& ctx) {
    const bool is_p1 = ctx.config.player1_moves_at(ctx.position);
    Symbol s = ctx.word.empty() ? 0 : ctx.word[ctx.word.size() - 1];
    if (!ctx.config.symbol_allowed(is_p1, s)) s = ctx.config.alphabet_of(is_p1)[0];
    return s;
  });
}

Strategy strategy_mimic_plus_one() {
  return Strategy("mimic", [](const MoveContext& ctx) {
    if (ctx.config.alphabet_size != 3 || ctx.config.bias != 1)
      throw domain_error("mimic strategy needs c = 3, t = 1");
    const Symbol prev = ctx.word.empty() ? 0 : ctx.word[ctx.word.size() - 1];
    return static_cast<Symbol>((prev + 1) % 3);
  });
}

Word four_ary_separated(std::size_t n, std::uint64_t budget) {
  // A new symbol at position p is legal iff it creates no pair of identical
  // blocks with gap ≤ 1. Per offset d that reduces to: d ≤ 2 forbids any match,
  // d ≥ 3 forbids a match-run of length d-1 ending at p.
  std::vector<Symbol> w;
  std::vector<std::vector<std::uint16_t>> runs;  // runs[p][d-1], d = 1..p
  std::vector<Symbol> next_try{0};
  std::uint64_t nodes = 0;

  while (w.size() < n) {
    if (next_try.back() > 3) {
      // Dead end: undo the previous symbol and advance it.
      next_try.pop_back();
      if (next_try.empty())
        throw budget_error("four_ary_separated: search space exhausted", nodes, w.size());
      w.pop_back();
      runs.pop_back();
      ++next_try.back();
      continue;
    }
    if (++nodes > budget)
      throw budget_error("four_ary_separated budget exhausted", nodes, w.size());

    const Symbol s = next_try.back();
    const std::size_t p = w.size();
    std::vector<std::uint16_t> row(p, 0);
    bool ok = true;
    for (std::size_t d = 1; d <= p && ok; ++d) {
      if (s == w[p - d]) {
        const std::uint16_t run =
            static_cast<std::uint16_t>(1 + (d <= p - 1 ? runs[p - 1][d - 1] : 0));
        row[d - 1] = run;
        if (d <= 2 || run >= d - 1) ok = false;
      }
    }
    if (!ok) {
      ++next_try.back();
      continue;
    }
    w.push_back(s);
    runs.push_back(std::move(row));
    next_try.push_back(0);
  }
  return Word(std::move(w), 4);
}

const Word& lookahead_base(std::size_t base_len, std::uint64_t budget) {
  static std::mutex mu;
  static std::map<std::size_t, Word> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(base_len);
  if (it == cache.end())
    it = cache.emplace(base_len, four_ary_separated(base_len, budget)).first;
  return it->second;
}

namespace {

// Pair view of a symbol: s = 4a + b within its 16-symbol class.
inline Symbol pair_a(Symbol s) { return (s % 16) / 4; }
inline Symbol pair_b(Symbol s) { return s % 4; }

// The pair part that forces the derived sequence alpha_j = a_j - b_{j-1} (mod 4)
// to follow the base word at every position the mover can influence.
Symbol forced_pair(const Word& base, const MoveContext& ctx) {
  const std::size_t j = ctx.word.size();  // 0-based index of this move
  if (j > base.size())
    throw domain_error("lookahead base exhausted; increase base_len");
  const Symbol prev_b = j == 0 ? 0 : pair_b(ctx.word[j - 1]);
  const Symbol a = j == 0 ? 0 : static_cast<Symbol>((base[j - 1] + prev_b) % 4);
  Symbol b = 0;
  if (ctx.committed_next && j < base.size()) {
    const Symbol a_next = pair_a(*ctx.committed_next);
    b = static_cast<Symbol>(((a_next - base[j]) % 4 + 4) % 4);
  }
  return static_cast<Symbol>(4 * a + b);
}

}  // namespace

Strategy strategy_lookahead_16(std::size_t base_len, std::uint64_t budget) {
  std::shared_ptr<const Word> base =
      std::make_shared<Word>(lookahead_base(base_len, budget));
  return Strategy(
      "lookahead-16",
      [base](const MoveContext& ctx) {
        if (ctx.config.alphabet_size != 16)
          throw domain_error("lookahead-16 needs alphabet size 16");
        if (!ctx.committed_next && ctx.position < ctx.config.horizon)
          throw domain_error("lookahead-16 needs the lookahead capability");
        return forced_pair(*base, ctx);
      },
      /*wants_lookahead=*/true);
}

Strategy strategy_lookahead_48(std::size_t base_len, std::uint64_t budget) {
  std::shared_ptr<const Word> base =
      std::make_shared<Word>(lookahead_base(base_len, budget));
  return Strategy(
      "lookahead-48",
      [base](const MoveContext& ctx) {
        if (ctx.config.alphabet_size != 48)
          throw domain_error("lookahead-48 needs alphabet size 48");
        if (!ctx.committed_next && ctx.position < ctx.config.horizon)
          throw domain_error("lookahead-48 needs the lookahead capability");
        const Symbol pair = forced_pair(*base, ctx);
        const std::size_t j = ctx.word.size();
        const Symbol prev_cls = j == 0 ? -1 : ctx.word[j - 1] / 16;
        const Symbol next_cls = ctx.committed_next ? *ctx.committed_next / 16 : -1;
        Symbol cls = 0;
        while (cls == prev_cls || cls == next_cls) ++cls;
        return static_cast<Symbol>(16 * cls + pair);
      },
      /*wants_lookahead=*/true);
}

}  // namespace thuelab::games
