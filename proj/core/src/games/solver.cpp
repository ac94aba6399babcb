#include "thuelab/games/solver.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <memory>
#include <ostream>
#include <unordered_map>

#include "thuelab/digest.hpp"
#include "thuelab/errors.hpp"

namespace thuelab::games {

using thuelab::budget_error;
using thuelab::domain_error;
using thuelab::io_error;

void StrategyTable::insert(const std::string& key, Symbol move) {
  table_[key] = move;
}

std::optional<Symbol> StrategyTable::lookup(const std::string& key) const {
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

namespace {
constexpr char kTableMagic[8] = {'T', 'H', 'U', 'E', 'T', 'B', 'L', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 8);
}

std::uint64_t get_u64(std::istream& in) {
  char buf[8] = {};
  in.read(buf, 8);
  if (!in) throw io_error("truncated strategy table");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
  return v;
}
}  // namespace

void StrategyTable::write(std::ostream& out) const {
  out.write(kTableMagic, 8);
  put_u64(out, table_.size());
  for (const auto& [key, move] : table_) {
    put_u64(out, key.size());
    out.write(key.data(), static_cast<std::streamsize>(key.size()));
    out.put(static_cast<char>(move));
  }
}

StrategyTable StrategyTable::read(std::istream& in) {
  char magic[8];
  in.read(magic, 8);
  if (!in || !std::equal(magic, magic + 8, kTableMagic))
    throw io_error("not a strategy table (bad magic)");
  StrategyTable t;
  const std::uint64_t count = get_u64(in);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t len = get_u64(in);
    if (len > (1u << 20)) throw io_error("corrupt strategy table (oversized key)");
    std::string key(len, '\0');
    in.read(key.data(), static_cast<std::streamsize>(len));
    const int move = in.get();
    if (!in) throw io_error("truncated strategy table");
    t.table_[key] = static_cast<Symbol>(static_cast<unsigned char>(move));
  }
  return t;
}

std::string StrategyTable::digest() const {
  std::string bytes;
  for (const auto& [key, move] : table_) {
    bytes += key;
    bytes.push_back('=');
    bytes.push_back(static_cast<char>(move));
    bytes.push_back(';');
  }
  return fnv1a64_hex(bytes);
}

namespace {

// Canonical key of the solver-relevant state: the last suffix_cap symbols with
// the alphabet relabeled by first occurrence, then the word length (the length
// fixes whose turn it is and how the schedule continues).
struct KeyBuilder {
  std::size_t suffix_cap;
  bool canonical;

  std::string key(const Word& w) const {
    const std::size_t len = w.size();
    const std::size_t from = len > suffix_cap ? len - suffix_cap : 0;
    std::string k;
    k.reserve(len - from + 8);
    if (canonical) {
      std::array<Symbol, 256> relabel;
      relabel.fill(-1);
      Symbol next = 0;
      for (std::size_t i = from; i < len; ++i) {
        Symbol& r = relabel[static_cast<std::size_t>(w[i])];
        if (r < 0) r = next++;
        k.push_back(static_cast<char>(r));
      }
    } else {
      for (std::size_t i = from; i < len; ++i) k.push_back(static_cast<char>(w[i]));
    }
    k.push_back('|');
    k += std::to_string(len);
    return k;
  }

  // Map a canonical move label back to a concrete symbol for the observed suffix.
  Symbol uncanonize(const Word& w, Symbol label) const {
    if (!canonical) return label;
    const std::size_t len = w.size();
    const std::size_t from = len > suffix_cap ? len - suffix_cap : 0;
    std::array<Symbol, 256> relabel;
    relabel.fill(-1);
    std::vector<Symbol> inverse;
    for (std::size_t i = from; i < len; ++i) {
      Symbol& r = relabel[static_cast<std::size_t>(w[i])];
      if (r < 0) {
        r = static_cast<Symbol>(inverse.size());
        inverse.push_back(w[i]);
      }
    }
    if (static_cast<std::size_t>(label) < inverse.size()) return inverse[label];
    // A fresh label stands for any unseen symbol; take the smallest one.
    for (Symbol s = 0;; ++s)
      if (relabel[static_cast<std::size_t>(s)] < 0) return s;
  }
};

struct SurvivalSearch {
  const GameConfig& cfg;
  const LossCondition& loss;
  const Strategy* fixed_p2;
  std::uint64_t budget;

  std::size_t target = 0;
  std::uint64_t nodes = 0;
  std::size_t proven = 0;  // carried into budget_error
  KeyBuilder keys{0, false};
  std::unordered_map<std::string, bool> memo;
  StrategyTable* record = nullptr;
  Word w;
  std::vector<Symbol> p1_alpha, p2_alpha;

  SurvivalSearch(const GameConfig& cfg, const LossCondition& loss,
                 const Strategy* fixed_p2, std::uint64_t budget)
      : cfg(cfg), loss(loss), fixed_p2(fixed_p2), budget(budget),
        w({}, cfg.alphabet_size), p1_alpha(cfg.alphabet_of(true)),
        p2_alpha(cfg.alphabet_of(false)) {}

  void set_target(std::size_t m) {
    target = m;
    keys = KeyBuilder{loss.relevant_suffix(m),
                      fixed_p2 == nullptr && cfg.player1_alphabet.empty() &&
                          cfg.player2_alphabet.empty()};
    memo.clear();
  }

  bool move_loses(Symbol s) {
    w.push_back(s);
    const bool lost = loss.witness_ending_at(w, w.size()).has_value();
    if (lost) w.pop_back();
    return lost;
  }

  bool survive() {
    if (++nodes > budget)
      throw budget_error("solver budget exhausted", nodes, proven);
    if (w.size() == target) return true;
    const std::size_t pos = w.size() + 1;
    const bool is_p1 = cfg.player1_moves_at(pos);
    const bool use_memo = fixed_p2 == nullptr;

    std::string key;
    if (use_memo || (record && is_p1)) key = keys.key(w);
    if (use_memo)
      if (auto it = memo.find(key); it != memo.end()) return it->second;

    bool result;
    if (!is_p1 && fixed_p2 != nullptr) {
      const Symbol s = (*fixed_p2)(MoveContext{w, cfg, pos, std::nullopt});
      if (!cfg.symbol_allowed(false, s))
        throw domain_error("fixed strategy '" + fixed_p2->name() +
                           "' played an out-of-alphabet symbol");
      if (move_loses(s)) {
        result = false;
      } else {
        result = survive();
        w.pop_back();
      }
    } else if (is_p1) {
      result = false;
      for (Symbol s : p1_alpha) {
        if (move_loses(s)) continue;
        const bool ok = survive();
        w.pop_back();
        if (ok) {
          if (record) record->insert(key, keys.canonical ? relabeled(s) : s);
          result = true;
          break;
        }
      }
    } else {
      result = true;
      for (Symbol s : p2_alpha) {
        if (move_loses(s)) {
          result = false;
          break;
        }
        const bool ok = survive();
        w.pop_back();
        if (!ok) {
          result = false;
          break;
        }
      }
    }
    if (use_memo) memo.emplace(std::move(key), result);
    return result;
  }

  Symbol relabeled(Symbol s) const {
    // Canonical label the chosen symbol would get when appended to the suffix.
    const std::size_t len = w.size();
    const std::size_t from = len > keys.suffix_cap ? len - keys.suffix_cap : 0;
    std::array<Symbol, 256> relabel;
    relabel.fill(-1);
    Symbol next = 0;
    for (std::size_t i = from; i < len; ++i) {
      Symbol& r = relabel[static_cast<std::size_t>(w[i])];
      if (r < 0) r = next++;
    }
    const Symbol r = relabel[static_cast<std::size_t>(s)];
    return r >= 0 ? r : next;
  }
};

}  // namespace

SolveResult solve_survival(const GameConfig& config, const LossCondition& loss,
                           std::uint64_t budget, const Strategy* fixed_p2) {
  config.validate();
  if (config.alphabet_size > 255)
    throw domain_error("solver supports alphabets up to 255 symbols");
  if (fixed_p2 && fixed_p2->wants_lookahead())
    throw domain_error("fixed Player 2 strategy must not use lookahead");

  SolveResult res;
  SurvivalSearch search(config, loss, fixed_p2, budget);

  std::size_t proven = 0;
  bool forced = false;
  for (std::size_t m = 1; m <= config.horizon; ++m) {
    search.set_target(m);
    if (!search.survive()) {
      forced = true;
      break;
    }
    proven = m;
    search.proven = m;
  }
  res.value = proven;
  res.loss_forced = forced;
  res.first_loss = forced ? proven + 1 : 0;
  if (proven > 0) {
    search.set_target(proven);
    search.record = &res.table;
    search.survive();
    search.record = nullptr;
  }
  res.nodes_explored = search.nodes;
  return res;
}

Strategy strategy_from_table(const StrategyTable& table, const GameConfig& config,
                             const LossCondition& loss) {
  // Keys were built for the horizon the table was solved at; value ≤ horizon,
  // and relevant_suffix is monotone, so the solving horizon's cap is recoverable
  // only if the caller passes the same config. Solved tables embed length in
  // keys, so a mismatched cap simply fails lookup loudly.
  auto keys = std::make_shared<KeyBuilder>(KeyBuilder{
      loss.relevant_suffix(config.horizon),
      config.player1_alphabet.empty() && config.player2_alphabet.empty()});
  auto tbl = std::make_shared<StrategyTable>(table);
  return Strategy("table", [keys, tbl](const MoveContext& ctx) {
    const std::string key = keys->key(ctx.word);
    auto move = tbl->lookup(key);
    if (!move)
      throw domain_error("state not covered by strategy table (key '" + key + "')");
    return keys->uncanonize(ctx.word, *move);
  });
}

}  // namespace thuelab::games
