#include "thuelab/games/signs.hpp"

#include "thuelab/errors.hpp"

namespace thuelab::games {

using thuelab::domain_error;

std::string encode_choices(const Transcript& transcript) {
  const Word& w = transcript.word;
  if (transcript.config.alphabet_size != 3 || transcript.config.bias != 1)
    throw domain_error("sign encoding is defined for c = 3, t = 1");
  if (w.empty()) return "";
  const Symbol shift = w[0];  // normalize the first move to 0
  auto norm = [&](std::size_t i) { return static_cast<Symbol>(((w[i] - shift) % 3 + 3) % 3); };

  std::string signs;
  Symbol prev_own = norm(0);
  for (std::size_t i = 2; i < w.size(); i += 2) {  // Player 1's later moves
    const Symbol diff = static_cast<Symbol>(((norm(i) - prev_own) % 3 + 3) % 3);
    if (diff == 1) signs.push_back('+');
    else if (diff == 2) signs.push_back('-');
    else {  // repeated his own symbol: loss is immediate, no sign
      signs.push_back('!');
      break;
    }
    prev_own = norm(i);
  }
  return signs;
}

Word decode_signs(const std::string& signs) {
  std::vector<Symbol> w{0};
  Symbol cur = 0;
  for (char c : signs) {
    w.push_back(static_cast<Symbol>((cur + 1) % 3));  // mimic reply
    if (c == '+') cur = static_cast<Symbol>((cur + 1) % 3);
    else if (c == '-') cur = static_cast<Symbol>((cur + 2) % 3);
    else throw domain_error(std::string("bad sign character '") + c + "'");
    w.push_back(cur);
  }
  w.push_back(static_cast<Symbol>((cur + 1) % 3));  // final mimic reply
  return Word(std::move(w), 3);
}

bool signs_forbidden(const std::string& signs) {
  return signs.find("--") != std::string::npos ||
         signs.find("+-+") != std::string::npos ||
         signs.find("+++++") != std::string::npos;
}

namespace {

// Square of blocks of length ≥ 2 ending exactly at position end of w.
bool square_ending_at(const std::vector<Symbol>& w, std::size_t end) {
  for (std::size_t len = 2; 2 * len <= end; ++len) {
    const std::size_t start = end - 2 * len;
    bool eq = true;
    for (std::size_t i = 0; eq && i < len; ++i) eq = w[start + i] == w[start + len + i];
    if (eq) return true;
  }
  return false;
}

struct SignSearch {
  std::size_t max_signs;
  MimicAnalysis result;
  std::vector<Symbol> w{0};  // first move normalized to 0
  std::string signs;

  void record_if_complete() {
    // Close the round with the mimic reply and test the full game.
    w.push_back(static_cast<Symbol>((w.back() + 1) % 3));
    const bool safe = !square_ending_at(w, w.size());
    if (safe) {
      const std::size_t moves = w.size();
      if (moves > result.max_complete_moves) {
        result.max_complete_moves = moves;
        result.longest_signs = {signs};
      } else if (moves == result.max_complete_moves) {
        result.longest_signs.push_back(signs);
      }
    }
    w.pop_back();
  }

  void dfs() {
    ++result.sequences_examined;
    record_if_complete();
    if (signs.size() == max_signs) return;
    const Symbol cur = w.back();
    // All three Player 1 choices; '!' (repeating his own symbol) never survives
    // the following mimic reply but is searched rather than assumed dead.
    for (char c : {'+', '-', '!'}) {
      const Symbol delta = c == '+' ? 1 : (c == '-' ? 2 : 0);
      const Symbol reply = static_cast<Symbol>((cur + 1) % 3);
      const Symbol next = static_cast<Symbol>((cur + delta) % 3);
      w.push_back(reply);
      const bool reply_safe = !square_ending_at(w, w.size());
      w.push_back(next);
      const bool move_safe = reply_safe && !square_ending_at(w, w.size());
      if (move_safe) {
        signs.push_back(c);
        dfs();
        signs.pop_back();
      }
      w.pop_back();
      w.pop_back();
    }
  }
};

}  // namespace

MimicAnalysis analyze_mimic(std::size_t max_signs) {
  SignSearch search{max_signs, {}, {0}, ""};
  search.dfs();
  return search.result;
}

}  // namespace thuelab::games
