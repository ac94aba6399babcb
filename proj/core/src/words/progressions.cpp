#include "thuelab/words/progressions.hpp"

#include "thuelab/errors.hpp"

namespace thuelab::words {

namespace {

void validate_interval(const Word& w, std::size_t start, std::size_t len) {
  if (start + len > w.size() || start + len < start)
    throw domain_error("interval outside word");
}

}  // namespace

std::optional<APWitness> find_rainbow_ap(const Word& w, std::size_t ival_start,
                                         std::size_t ival_len, std::size_t r, int k) {
  validate_interval(w, ival_start, ival_len);
  if (r < 1) throw domain_error("difference must be ≥ 1");
  if (k < 1) throw domain_error("terms must be ≥ 1");
  const std::size_t span = static_cast<std::size_t>(k - 1) * r;
  if (span >= ival_len) return std::nullopt;
  const std::size_t last_start = ival_start + ival_len - 1 - span;
  for (std::size_t s = ival_start; s <= last_start; ++s) {
    bool rainbow = true;
    for (int i = 0; rainbow && i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (w[s + i * r] == w[s + j * r]) {
          rainbow = false;
          break;
        }
    if (rainbow) return APWitness{s, r, k, APKind::rainbow};
  }
  return std::nullopt;
}

std::optional<APWitness> find_prismatic_pair(const Word& w, std::size_t ival_start,
                                             std::size_t ival_len, std::size_t r, int k) {
  validate_interval(w, ival_start, ival_len);
  if (r < 3 || r % 2 == 0) throw domain_error("difference must be odd and ≥ 3");
  if (k < 1) throw domain_error("terms must be ≥ 1");
  const std::size_t span = static_cast<std::size_t>(k - 1) * r + 1;  // beta ends one later
  if (span >= ival_len) return std::nullopt;
  const std::size_t last_start = ival_start + ival_len - 1 - span;

  // Distinctness applies at terms sitting on odd 1-based positions: 0-based even.
  auto progression_ok = [&](std::size_t base) {
    for (int j = 1; j < k; ++j) {
      const std::size_t pj = base + static_cast<std::size_t>(j) * r;
      if (pj % 2 != 0) continue;
      for (int i = 0; i < j; ++i)
        if (w[base + static_cast<std::size_t>(i) * r] == w[pj]) return false;
    }
    return true;
  };

  for (std::size_t s = ival_start; s <= last_start; ++s)
    if (progression_ok(s) && progression_ok(s + 1))
      return APWitness{s, r, k, APKind::prismatic};
  return std::nullopt;
}

}  // namespace thuelab::words
