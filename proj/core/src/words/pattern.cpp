#include "thuelab/words/pattern.hpp"

#include <algorithm>
#include <functional>

#include "thuelab/errors.hpp"

namespace thuelab::words {

Pattern::Pattern(std::vector<int> variables) : variables_(std::move(variables)) {
  if (variables_.empty()) throw domain_error("pattern must be nonempty");
  int next = 0;
  for (int v : variables_) {
    if (v < 0 || v > next)
      throw domain_error("pattern variables must be 0..v-1 with first occurrences in order");
    if (v == next) ++next;
  }
  variable_count_ = next;
}

Pattern Pattern::parse(std::string_view letters) {
  std::vector<int> vars;
  std::vector<char> seen;
  for (char c : letters) {
    auto it = std::find(seen.begin(), seen.end(), c);
    if (it == seen.end()) {
      seen.push_back(c);
      vars.push_back(static_cast<int>(seen.size()) - 1);
    } else {
      vars.push_back(static_cast<int>(it - seen.begin()));
    }
  }
  return Pattern(std::move(vars));
}

std::size_t Pattern::occurrences(int variable) const {
  return static_cast<std::size_t>(std::count(variables_.begin(), variables_.end(), variable));
}

std::string Pattern::to_letters() const {
  static const char letters[] = "xyzwabcdefghijklmnopqrstuv";
  std::string out;
  for (int v : variables_)
    out.push_back(v < 26 ? letters[v] : '?');
  return out;
}

namespace {

struct MatchSearch {
  const Word& w;
  const Pattern& p;
  std::size_t min_len;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  std::vector<std::size_t> var_len;    // 0 = unassigned
  std::vector<std::size_t> var_first;  // start of the variable's first block

  bool dfs(std::size_t idx, std::size_t pos) {
    if (++nodes > budget)
      throw budget_error("pattern match budget exhausted", nodes);
    if (idx == p.length()) return true;
    const int v = p[idx];
    const std::size_t remaining_slots = p.length() - idx - 1;
    if (var_len[v] != 0) {
      const std::size_t len = var_len[v];
      if (pos + len + remaining_slots * min_len > w.size()) return false;
      for (std::size_t i = 0; i < len; ++i)
        if (w[pos + i] != w[var_first[v] + i]) return false;
      return dfs(idx + 1, pos + len);
    }
    const std::size_t reserve = remaining_slots * min_len;
    for (std::size_t len = min_len; pos + len + reserve <= w.size(); ++len) {
      var_len[v] = len;
      var_first[v] = pos;
      if (dfs(idx + 1, pos + len)) return true;
      var_len[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<BlockPartition> pattern_match(const Word& w, const Pattern& p,
                                            std::size_t min_block_len,
                                            std::uint64_t budget) {
  if (min_block_len < 1) throw domain_error("min_block_len must be ≥ 1");
  MatchSearch search{w, p, min_block_len, budget, 0,
                     std::vector<std::size_t>(p.variable_count(), 0),
                     std::vector<std::size_t>(p.variable_count(), 0)};
  for (std::size_t s = 0; s + p.length() * min_block_len <= w.size(); ++s) {
    std::fill(search.var_len.begin(), search.var_len.end(), 0);
    if (search.dfs(0, s)) {
      BlockPartition part{s, {}};
      for (std::size_t i = 0; i < p.length(); ++i)
        part.block_lengths.push_back(search.var_len[p[i]]);
      return part;
    }
  }
  return std::nullopt;
}

std::uint64_t count_compatible_partitions(std::size_t n, const Pattern& p,
                                          std::size_t min_block_len) {
  if (min_block_len < 1) throw domain_error("min_block_len must be ≥ 1");
  const int v = p.variable_count();
  std::vector<std::size_t> mult(v, 0);
  for (std::size_t i = 0; i < p.length(); ++i) ++mult[p[i]];

  // Count length assignments L_var ≥ min with sum(mult_var * L_var) = n.
  std::function<std::uint64_t(int, std::size_t)> count = [&](int var,
                                                             std::size_t rest) -> std::uint64_t {
    std::size_t reserve = 0;
    for (int u = var + 1; u < v; ++u) reserve += mult[u] * min_block_len;
    if (var == v - 1)
      return (rest % mult[var] == 0 && rest / mult[var] >= min_block_len) ? 1 : 0;
    std::uint64_t total = 0;
    for (std::size_t len = min_block_len; mult[var] * len + reserve <= rest; ++len)
      total += count(var + 1, rest - mult[var] * len);
    return total;
  };
  return count(0, n);
}

Pattern zimin(int n) {
  if (n < 1) throw domain_error("zimin index must be ≥ 1");
  if (n > 20) throw domain_error("zimin pattern beyond 2^20 symbols refused");
  std::vector<int> vars{0};
  for (int v = 1; v < n; ++v) {
    std::vector<int> next = vars;
    next.push_back(v);
    next.insert(next.end(), vars.begin(), vars.end());
    vars = std::move(next);
  }
  return Pattern(std::move(vars));
}

Word zimin_word(int n) {
  const Pattern z = zimin(n);
  std::vector<Symbol> syms(z.variables().begin(), z.variables().end());
  return Word(std::move(syms), std::max(n, 1));
}

bool is_unavoidable(const Pattern& p, std::uint64_t budget) {
  return pattern_match(zimin_word(p.variable_count()), p, 1, budget).has_value();
}

bool has_isolated_variable(const Pattern& p) {
  for (int v = 0; v < p.variable_count(); ++v)
    if (p.occurrences(v) == 1) return true;
  return false;
}

}  // namespace thuelab::words
