#include "thuelab/words/generate.hpp"

namespace thuelab::words {

Word thue_morse(int iterations) {
  if (iterations < 0) throw domain_error("iterations must be ≥ 0");
  if (iterations > 30) throw domain_error("thue_morse beyond 2^30 symbols refused");
  std::vector<Symbol> cur{0};
  for (int i = 0; i < iterations; ++i) {
    std::vector<Symbol> next;
    next.reserve(cur.size() * 2);
    for (Symbol s : cur) {
      next.push_back(s);
      next.push_back(1 - s);
    }
    cur = std::move(next);
  }
  return Word(std::move(cur), 2);
}

Word derive_ternary(const Word& w) {
  if (w.alphabet_size() != 2) throw domain_error("derive_ternary needs a binary word");
  std::vector<Symbol> out;
  std::size_t zeros_seen = 0;
  std::size_t ones_run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 1) {
      // Any 1-run of length 3 is itself a cube, whether or not zeros enclose it.
      if (++ones_run > 2) throw cube_error(zeros_seen, ones_run);
      continue;
    }
    if (zeros_seen > 0) out.push_back(static_cast<Symbol>(ones_run));
    ++zeros_seen;
    ones_run = 0;
  }
  if (zeros_seen < 2) throw domain_error("derive_ternary needs at least two zeros");
  return Word(std::move(out), 3);
}

}  // namespace thuelab::words
