#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace thuelab::lll {

inline constexpr std::uint64_t kDefaultFamilyBudget = 1ull << 12;

/// Bit vector with one bit per atom of the outcome space.
class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { words_[i >> 6] |= 1ull << (i & 63); }
  std::size_t count() const;
  bool any() const;

  Bitset& operator&=(const Bitset& o);
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    r &= o;
    return r;
  }
  /// Complement within the atom space (bits past size() stay zero).
  Bitset complement() const;

  bool operator==(const Bitset&) const = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A finite probability space with events, a directed dependency graph, a
/// total quasi-order given by real keys, and a weight x_A per event.
struct EventSystem {
  /// coins > 0 describes 2^coins equiprobable atoms (atom index = coin bits);
  /// coins == 0 means `probs` lists one probability per atom explicitly.
  std::size_t coins = 0;
  std::vector<double> probs;
  std::vector<Bitset> events;
  std::vector<std::vector<std::size_t>> edges;  // out-neighborhood per event
  std::vector<double> keys;
  std::vector<double> x;

  std::size_t atom_count() const;
  std::size_t event_count() const { return events.size(); }
  double probability(const Bitset& set) const;

  /// Checks probabilities (nonnegative, sum 1 within 1e-12), weights in (0,1),
  /// and per-event shape consistency. Throws domain_error on the first defect.
  void validate() const;
};

struct GraphViolation {
  std::size_t a, b, c;
};

struct GraphCheckResult {
  bool ok = true;
  std::vector<GraphViolation> violations;
};

/// Order compatibility of the dependency graph: for every event A, every
/// B in Gamma(A) and every C outside Gamma(A) and different from A, either
/// key(C) <= key(B) or key(C) > key(A). Exhaustive over all triples.
GraphCheckResult check_graph_condition(const EventSystem& sys);

struct HypothesisReport {
  bool ok = true;
  /// min over (A, C-family) of x_A prod_{B in Gamma(A)}(1 - x_B) - P(A | inter Cbar).
  double worst_margin = 0.0;
  std::size_t worst_event = 0;
  std::vector<std::size_t> worst_family;
  std::uint64_t families_checked = 0;
  std::uint64_t zero_probability_skipped = 0;
  bool exhaustive = true;
  std::string coverage;
};

/// Conditional-probability hypothesis over families of predecessors: for each
/// event A, the eligible C are events outside Gamma(A) and not A itself with
/// key(C) <= key(A). Exhausts all 2^e families while 2^e <= family_budget;
/// beyond that it samples 10^4 families (deterministically seeded) plus every
/// singleton and the full eligible set, and marks the report non-exhaustive.
/// Families whose conditioning event has probability 0 are skipped and counted.
HypothesisReport check_hypothesis(const EventSystem& sys,
                                  std::uint64_t family_budget = kDefaultFamilyBudget);

struct ConclusionReport {
  double probability = 1.0;   // P(inter_{A1} Abar | inter_{A2} Abar)
  double lower_bound = 1.0;   // prod_{A in A1} (1 - x_A)
  bool satisfied = true;
};

/// Exact conclusion check on one instance: conditional probability of avoiding
/// every A1-event given every A2-event is avoided, against the product bound.
/// Requires a1, a2 disjoint, key(A2) <= key(A1) for every pair, and at most
/// 2^24 atoms. Throws domain_error if the conditioning event has probability 0.
/// `satisfied` allows a 1e-12 slack so rounding never flags a true instance.
ConclusionReport brute_force_conclusion(const EventSystem& sys,
                                        const std::vector<std::size_t>& a1,
                                        const std::vector<std::size_t>& a2);

/// Text round-trip. Sections, in order: [atoms] (either `coins=<n>` or one
/// probability per line), [events] (per event: whitespace-separated atom
/// indices, `-` for the empty event, or `mask <m> <v>` selecting atoms with
/// (atom & m) == v in coin mode), [edges] (lines `from: to to ...`; events
/// without a line have no out-edges), [keys] and [x] (one value per event).
/// `#` starts a comment; blank lines are ignored.
EventSystem parse_event_system(std::istream& in);
EventSystem read_event_system_file(const std::string& path);
std::string format_event_system(const EventSystem& sys);
void write_event_system_file(const EventSystem& sys, const std::string& path);

}  // namespace thuelab::lll
