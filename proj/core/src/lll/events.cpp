#include "thuelab/lll/events.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "thuelab/errors.hpp"
#include "thuelab/rng.hpp"

namespace thuelab::lll {

std::size_t Bitset::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool Bitset::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  if (bits_ != o.bits_) throw domain_error("Bitset size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset Bitset::complement() const {
  Bitset r(bits_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  if (bits_ & 63) r.words_.back() &= (1ull << (bits_ & 63)) - 1;
  return r;
}

std::size_t EventSystem::atom_count() const {
  return coins > 0 ? std::size_t{1} << coins : probs.size();
}

double EventSystem::probability(const Bitset& set) const {
  if (coins > 0)
    return static_cast<double>(set.count()) / static_cast<double>(std::size_t{1} << coins);
  double p = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i)
    if (set.test(i)) p += probs[i];
  return p;
}

void EventSystem::validate() const {
  if (coins > 24) throw domain_error("EventSystem: more than 24 coins");
  if (coins > 0 && !probs.empty())
    throw domain_error("EventSystem: both coins and explicit probabilities given");
  const std::size_t atoms = atom_count();
  if (atoms == 0) throw domain_error("EventSystem: empty atom space");
  if (coins == 0) {
    double sum = 0.0;
    for (double p : probs) {
      if (!(p >= 0.0)) throw domain_error("EventSystem: negative atom probability");
      sum += p;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
      throw domain_error("EventSystem: atom probabilities must sum to 1");
  }
  const std::size_t m = events.size();
  if (edges.size() != m || keys.size() != m || x.size() != m)
    throw domain_error("EventSystem: events, edges, keys, x must have equal length");
  for (std::size_t i = 0; i < m; ++i) {
    if (events[i].size() != atoms)
      throw domain_error("EventSystem: event bitset does not span the atom space");
    if (!(x[i] > 0.0 && x[i] < 1.0))
      throw domain_error("EventSystem: weights must lie strictly in (0, 1)");
    if (!std::isfinite(keys[i])) throw domain_error("EventSystem: key not finite");
    for (std::size_t j : edges[i])
      if (j >= m) throw domain_error("EventSystem: edge target out of range");
  }
}

GraphCheckResult check_graph_condition(const EventSystem& sys) {
  sys.validate();
  GraphCheckResult res;
  const std::size_t m = sys.event_count();
  std::vector<char> in_gamma(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::fill(in_gamma.begin(), in_gamma.end(), 0);
    in_gamma[a] = 1;
    for (std::size_t b : sys.edges[a]) in_gamma[b] = 1;
    for (std::size_t b : sys.edges[a])
      for (std::size_t c = 0; c < m; ++c) {
        if (in_gamma[c]) continue;
        if (sys.keys[c] > sys.keys[b] && !(sys.keys[c] > sys.keys[a])) {
          res.ok = false;
          res.violations.push_back({a, b, c});
        }
      }
  }
  return res;
}

namespace {

// P(A | inter of complements of family), or -1 if conditioning has measure 0.
double conditional_probability(const EventSystem& sys, std::size_t a,
                               const std::vector<std::size_t>& family) {
  Bitset cond = Bitset(sys.atom_count()).complement();  // full space
  for (std::size_t c : family) cond &= sys.events[c].complement();
  const double denom = sys.probability(cond);
  if (denom <= 0.0) return -1.0;
  return sys.probability(sys.events[a] & cond) / denom;
}

}  // namespace

HypothesisReport check_hypothesis(const EventSystem& sys, std::uint64_t family_budget) {
  sys.validate();
  HypothesisReport rep;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  const std::size_t m = sys.event_count();

  std::size_t sampled_events = 0;
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<char> in_gamma(m, 0);
    in_gamma[a] = 1;
    for (std::size_t b : sys.edges[a]) in_gamma[b] = 1;
    std::vector<std::size_t> eligible;
    for (std::size_t c = 0; c < m; ++c)
      if (!in_gamma[c] && sys.keys[c] <= sys.keys[a]) eligible.push_back(c);

    double bound = sys.x[a];
    for (std::size_t b : sys.edges[a]) bound *= 1.0 - sys.x[b];

    auto consider = [&](const std::vector<std::size_t>& family) {
      const double p = conditional_probability(sys, a, family);
      if (p < 0.0) {
        ++rep.zero_probability_skipped;
        return;
      }
      ++rep.families_checked;
      const double margin = bound - p;
      if (margin < rep.worst_margin) {
        rep.worst_margin = margin;
        rep.worst_event = a;
        rep.worst_family = family;
      }
    };

    const std::size_t e = eligible.size();
    if (e < 64 && (std::uint64_t{1} << e) <= family_budget) {
      std::vector<std::size_t> family;
      for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << e); ++sel) {
        family.clear();
        for (std::size_t i = 0; i < e; ++i)
          if ((sel >> i) & 1) family.push_back(eligible[i]);
        consider(family);
      }
    } else {
      ++sampled_events;
      rep.exhaustive = false;
      consider({});
      for (std::size_t c : eligible) consider({c});
      consider(eligible);
      Rng rng(0x1efdedull * (a + 1));  // fixed seed: reports are reproducible
      std::vector<std::size_t> family;
      for (int trial = 0; trial < 10'000; ++trial) {
        family.clear();
        for (std::size_t c : eligible)
          if (rng.below(2) == 1) family.push_back(c);
        consider(family);
      }
    }
  }

  rep.ok = !(rep.worst_margin < 0.0);
  std::ostringstream cov;
  if (rep.exhaustive) {
    cov << "exhaustive over all eligible families";
  } else {
    cov << sampled_events << " of " << m
        << " events sampled (10^4 random families plus singletons and the full set)";
  }
  if (rep.zero_probability_skipped > 0)
    cov << "; " << rep.zero_probability_skipped << " zero-probability conditionings skipped";
  rep.coverage = cov.str();
  return rep;
}

ConclusionReport brute_force_conclusion(const EventSystem& sys,
                                        const std::vector<std::size_t>& a1,
                                        const std::vector<std::size_t>& a2) {
  sys.validate();
  if (sys.atom_count() > (std::size_t{1} << 24))
    throw domain_error("brute_force_conclusion: atom space exceeds 2^24");
  const std::size_t m = sys.event_count();
  std::vector<char> tag(m, 0);
  for (std::size_t i : a1) {
    if (i >= m) throw domain_error("brute_force_conclusion: index out of range");
    tag[i] = 1;
  }
  for (std::size_t i : a2) {
    if (i >= m) throw domain_error("brute_force_conclusion: index out of range");
    if (tag[i]) throw domain_error("brute_force_conclusion: families must be disjoint");
    tag[i] = 2;
  }
  for (std::size_t i : a2)
    for (std::size_t j : a1)
      if (sys.keys[i] > sys.keys[j])
        throw domain_error("brute_force_conclusion: requires key(A2) <= key(A1) pairwise");

  Bitset cond = Bitset(sys.atom_count()).complement();
  for (std::size_t i : a2) cond &= sys.events[i].complement();
  const double denom = sys.probability(cond);
  if (denom <= 0.0)
    throw domain_error("brute_force_conclusion: conditioning event has probability 0");

  Bitset num = cond;
  for (std::size_t i : a1) num &= sys.events[i].complement();

  ConclusionReport rep;
  rep.probability = sys.probability(num) / denom;
  rep.lower_bound = 1.0;
  for (std::size_t i : a1) rep.lower_bound *= 1.0 - sys.x[i];
  rep.satisfied = rep.probability >= rep.lower_bound - 1e-12;
  return rep;
}

namespace {

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;
  // Returns the next non-blank line with comments stripped, or false at EOF.
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
      while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' || raw.back() == '\r'))
        raw.pop_back();
      std::size_t start = raw.find_first_not_of(" \t");
      if (start == std::string::npos) continue;
      out = raw.substr(start);
      return true;
    }
    return false;
  }
};

}  // namespace

EventSystem parse_event_system(std::istream& in) {
  EventSystem sys;
  LineReader rd{in};
  std::string line;
  std::string section;
  std::vector<std::string> event_lines, edge_lines;
  std::vector<double> key_vals, x_vals;

  while (rd.next(line)) {
    if (line.front() == '[') {
      if (line.back() != ']')
        throw parse_error("unterminated section header", rd.line_no);
      section = line.substr(1, line.size() - 2);
      if (section != "atoms" && section != "events" && section != "edges" &&
          section != "keys" && section != "x")
        throw parse_error("unknown section [" + section + "]", rd.line_no);
      continue;
    }
    if (section == "atoms") {
      if (line.rfind("coins=", 0) == 0) {
        try {
          sys.coins = std::stoul(line.substr(6));
        } catch (const std::exception&) {
          throw parse_error("bad coin count", rd.line_no);
        }
        if (sys.coins == 0 || sys.coins > 24)
          throw parse_error("coin count must lie in [1, 24]", rd.line_no);
      } else {
        std::istringstream ls(line);
        double p;
        while (ls >> p) sys.probs.push_back(p);
        if (!ls.eof()) throw parse_error("bad probability value", rd.line_no);
      }
    } else if (section == "events") {
      event_lines.push_back(line);
    } else if (section == "edges") {
      edge_lines.push_back(line);
    } else if (section == "keys" || section == "x") {
      std::istringstream ls(line);
      double v;
      auto& dst = section == "keys" ? key_vals : x_vals;
      while (ls >> v) dst.push_back(v);
      if (!ls.eof()) throw parse_error("bad value in [" + section + "]", rd.line_no);
    } else {
      throw parse_error("content before any section header", rd.line_no);
    }
  }

  const std::size_t atoms = sys.atom_count();
  if (atoms == 0) throw parse_error("no atoms defined", rd.line_no);

  for (const auto& el : event_lines) {
    Bitset ev(atoms);
    if (el == "-") {
      sys.events.push_back(std::move(ev));
      continue;
    }
    std::istringstream ls(el);
    std::string tok;
    ls >> tok;
    if (tok == "mask") {
      if (sys.coins == 0) throw parse_error("mask events need coin-mode atoms", rd.line_no);
      std::uint64_t msk, val;
      std::string ms, vs;
      if (!(ls >> ms >> vs)) throw parse_error("mask needs two values", rd.line_no);
      try {
        msk = std::stoull(ms, nullptr, 0);
        val = std::stoull(vs, nullptr, 0);
      } catch (const std::exception&) {
        throw parse_error("bad mask value", rd.line_no);
      }
      for (std::size_t atom = 0; atom < atoms; ++atom)
        if ((atom & msk) == val) ev.set(atom);
    } else {
      std::istringstream all(el);
      std::size_t idx;
      while (all >> idx) {
        if (idx >= atoms) throw parse_error("atom index out of range", rd.line_no);
        ev.set(idx);
      }
      if (!all.eof()) throw parse_error("bad atom index", rd.line_no);
    }
    sys.events.push_back(std::move(ev));
  }

  sys.edges.assign(sys.events.size(), {});
  for (const auto& el : edge_lines) {
    auto colon = el.find(':');
    if (colon == std::string::npos) throw parse_error("edge line needs `from:`", rd.line_no);
    std::size_t from;
    try {
      from = std::stoul(el.substr(0, colon));
    } catch (const std::exception&) {
      throw parse_error("bad edge source", rd.line_no);
    }
    if (from >= sys.events.size()) throw parse_error("edge source out of range", rd.line_no);
    std::istringstream ls(el.substr(colon + 1));
    std::size_t to;
    while (ls >> to) {
      if (to >= sys.events.size()) throw parse_error("edge target out of range", rd.line_no);
      sys.edges[from].push_back(to);
    }
    if (!ls.eof()) throw parse_error("bad edge target", rd.line_no);
  }

  if (key_vals.size() != sys.events.size())
    throw parse_error("[keys] must list one value per event", rd.line_no);
  if (x_vals.size() != sys.events.size())
    throw parse_error("[x] must list one value per event", rd.line_no);
  sys.keys = std::move(key_vals);
  sys.x = std::move(x_vals);
  sys.validate();
  return sys;
}

EventSystem read_event_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return parse_event_system(in);
}

std::string format_event_system(const EventSystem& sys) {
  std::ostringstream out;
  out.precision(17);
  out << "[atoms]\n";
  if (sys.coins > 0) {
    out << "coins=" << sys.coins << "\n";
  } else {
    for (double p : sys.probs) out << p << "\n";
  }
  out << "[events]\n";
  for (const auto& ev : sys.events) {
    bool first = true;
    for (std::size_t i = 0; i < ev.size(); ++i)
      if (ev.test(i)) {
        out << (first ? "" : " ") << i;
        first = false;
      }
    if (first) out << "-";
    out << "\n";
  }
  out << "[edges]\n";
  for (std::size_t i = 0; i < sys.edges.size(); ++i) {
    if (sys.edges[i].empty()) continue;
    out << i << ":";
    for (std::size_t j : sys.edges[i]) out << " " << j;
    out << "\n";
  }
  out << "[keys]\n";
  for (double kv : sys.keys) out << kv << "\n";
  out << "[x]\n";
  for (double xv : sys.x) out << xv << "\n";
  return out.str();
}

void write_event_system_file(const EventSystem& sys, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << format_event_system(sys);
  if (!out) throw io_error("write failed for " + path);
}

}  // namespace thuelab::lll
