// thuelab: generate and check nonrepetitive words, solve and play biased
// games, evaluate probabilistic bounds. Every batch run can record a manifest
// that replays to byte-identical output.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "thuelab/digest.hpp"
#include "thuelab/errors.hpp"
#include "thuelab/games/game.hpp"
#include "thuelab/games/montecarlo.hpp"
#include "thuelab/games/signs.hpp"
#include "thuelab/games/solver.hpp"
#include "thuelab/games/strategies.hpp"
#include "thuelab/lll/bounds.hpp"
#include "thuelab/lll/chains.hpp"
#include "thuelab/rng.hpp"
#include "thuelab/words/generate.hpp"
#include "thuelab/words/io.hpp"
#include "thuelab/words/pattern.hpp"
#include "thuelab/words/progressions.hpp"
#include "thuelab/words/repetition.hpp"
#include "thuelab/words/word.hpp"

namespace {

using nlohmann::ordered_json;
using namespace thuelab;
using games::GameConfig;
using games::LossCondition;
using games::Strategy;
using words::Symbol;
using words::Word;

constexpr int kVersionMajor = 0, kVersionMinor = 1, kVersionPatch = 0;
constexpr std::uint64_t kGenSymbolBudget = 1ull << 26;

std::string version_string() {
  return std::to_string(kVersionMajor) + "." + std::to_string(kVersionMinor) +
         "." + std::to_string(kVersionPatch);
}

int run_cli(const std::vector<std::string>& args);

// --- plumbing ---------------------------------------------------------------

struct Common {
  bool json = false;
  std::string manifest;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = 0;
};

void add_common(CLI::App* sub, Common& c, bool with_seed, bool with_budget,
                bool with_out = true) {
  sub->add_flag("--json", c.json, "print machine-readable JSON on stdout");
  sub->add_option("--manifest", c.manifest, "write a run manifest to this path");
  if (with_out)
    sub->add_option("--out", c.out, "also write the result JSON to this path");
  if (with_seed)
    sub->add_option("--seed", c.seed, "RNG seed (omitted: entropy, recorded)");
  if (with_budget)
    sub->add_option("--budget", c.budget,
                    "search node budget (0 = THUELAB_BUDGET or built-in)");
}

std::uint64_t resolve_budget(std::uint64_t flag_value, std::uint64_t fallback) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("THUELAB_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw domain_error(std::string("THUELAB_BUDGET is not a number: ") + env);
    }
  }
  return fallback;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a64_hex(buf.str());
}

// Everything the manifest needs beyond the option values themselves.
struct RunIo {
  std::vector<std::string> argv;  // normalized, replayable token list
  std::optional<std::uint64_t> seed;
  ordered_json params = ordered_json::object();
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<Symbol> human_moves;
};

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write " + path);
  out << text;
  if (!out) throw io_error("write failed for " + path);
}

void write_manifest(const std::string& path, const std::string& sub, const RunIo& io) {
  ordered_json m;
  m["schema"] = 1;
  m["tool"] = "thuelab";
  m["version"] = version_string();
  m["subcommand"] = sub;
  m["argv"] = io.argv;
  if (io.seed)
    m["seed"] = *io.seed;
  else
    m["seed"] = nullptr;
  m["params"] = io.params;
  ordered_json digests = ordered_json::object();
  for (const auto& p : io.inputs) digests[p] = digest_file(p);
  m["input_digests"] = digests;
  ordered_json outs = ordered_json::array();
  for (const auto& p : io.outputs)
    outs.push_back(ordered_json{{"path", p}, {"digest", digest_file(p)}});
  m["outputs"] = outs;
  if (!io.human_moves.empty()) m["human_moves"] = io.human_moves;
  write_text_file(path, m.dump(2) + "\n");
}

// Writes --out and --manifest, then the primary output: JSON when asked,
// otherwise the human rendering. Returns rc unchanged.
int emit(const std::string& sub, ordered_json& result, const Common& c, RunIo& io,
         int rc, const std::function<void(std::ostream&)>& human) {
  const std::string canonical = result.dump(2) + "\n";
  if (!c.out.empty()) {
    write_text_file(c.out, canonical);
    io.outputs.push_back(c.out);
  }
  if (!c.manifest.empty()) write_manifest(c.manifest, sub, io);
  if (c.json)
    std::cout << canonical;
  else
    human(std::cout);
  return rc;
}

void push_common_tokens(std::vector<std::string>& a, const Common& c) {
  if (c.budget > 0) {
    a.push_back("--budget");
    a.push_back(std::to_string(c.budget));
  }
  if (!c.out.empty()) {
    a.push_back("--out");
    a.push_back(c.out);
  }
  if (c.json) a.push_back("--json");
}

// --- shared parsers ---------------------------------------------------------

struct LossSpec {
  LossCondition cond = LossCondition::repetition(2, 1);
  std::string name;
};

LossSpec parse_loss(const std::string& s) {
  std::smatch m;
  static const std::regex square{R"(square-min(\d+))"}, cube{R"(cube-min(\d+))"},
      rep{R"(rep(\d+)-min(\d+))"}, rep_total{R"(rep(\d+)-total(\d+))"},
      sep{R"(sep-min(\d+)-eps(\d*\.?\d+)(-halfn)?)"};
  LossSpec out;
  out.name = s;
  if (std::regex_match(s, m, square)) {
    out.cond = LossCondition::repetition(2, std::stoul(m[1]));
  } else if (std::regex_match(s, m, cube)) {
    out.cond = LossCondition::repetition(3, std::stoul(m[1]));
  } else if (std::regex_match(s, m, rep)) {
    out.cond = LossCondition::repetition(std::stoi(m[1]), std::stoul(m[2]));
  } else if (std::regex_match(s, m, rep_total)) {
    out.cond = LossCondition::repetition_total(std::stoi(m[1]), std::stoul(m[2]));
  } else if (std::regex_match(s, m, sep)) {
    const std::size_t min_len = std::stoul(m[1]);
    const double eps = std::stod(m[2]);
    const bool halfn = m[3].matched;
    if (eps <= 0 || eps >= 2) throw domain_error("separation eps must be in (0,2)");
    auto f = [eps, halfn](std::size_t n) {
      const double e = halfn ? double(n) / 2.0 : (double(n) - 1.0) / 2.0;
      return std::pow(2.0 - eps, e);
    };
    std::string desc = "(2-" + m[2].str() + ")^(" + (halfn ? "n/2" : "(n-1)/2") + ")";
    out.cond = LossCondition::separation(min_len, f, desc);
  } else {
    throw domain_error(
        "unrecognized loss '" + s +
        "'; expected square-min<N>, cube-min<N>, rep<K>-min<N>, rep<K>-total<N>, "
        "or sep-min<L>-eps<E>[-halfn]");
  }
  return out;
}

std::string join_symbols(const std::vector<Symbol>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

Strategy strategy_scripted(std::vector<Symbol> moves) {
  auto next = std::make_shared<std::size_t>(0);
  return Strategy("scripted", [moves = std::move(moves), next](const games::MoveContext&) {
    if (*next >= moves.size())
      throw domain_error("scripted strategy ran out of moves");
    return moves[(*next)++];
  });
}

Strategy strategy_human(std::shared_ptr<std::vector<Symbol>> log) {
  return Strategy("human", [log](const games::MoveContext& ctx) -> Symbol {
    const bool p1 = ctx.config.player1_moves_at(ctx.position);
    for (;;) {
      std::cerr << "word so far: " << (ctx.word.empty() ? "(empty)" : ctx.word.to_text())
                << "\nyour move at position " << ctx.position << " (symbols "
                << join_symbols(ctx.config.alphabet_of(p1)) << "): " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) throw io_error("input closed during interactive play");
      try {
        const Symbol s = static_cast<Symbol>(std::stol(line));
        if (ctx.config.symbol_allowed(p1, s)) {
          log->push_back(s);
          return s;
        }
      } catch (const std::exception&) {
      }
      std::cerr << "invalid move: enter one of your symbols as a decimal integer, "
                   "one move per line\n";
    }
  });
}

// Registered strategy names. `io` collects table inputs and human move logs.
Strategy make_strategy(const std::string& name, std::uint64_t seed,
                       const GameConfig& cfg, const LossCondition& loss,
                       std::uint64_t budget, bool interactive, RunIo* io) {
  std::smatch m;
  static const std::regex constant{R"(constant(\d+))"}, table{R"(table:(.+))"},
      scripted{R"(scripted:([0-9,]*))"};
  if (name == "random") return games::strategy_random(seed);
  if (name == "copycat") return games::strategy_copycat();
  if (name == "mimic") return games::strategy_mimic_plus_one();
  if (name == "lookahead-16" || name == "lookahead-48") {
    const std::size_t base_len = std::max<std::size_t>(2048, cfg.horizon + 1);
    return name == "lookahead-16" ? games::strategy_lookahead_16(base_len, budget)
                                  : games::strategy_lookahead_48(base_len, budget);
  }
  if (std::regex_match(name, m, constant))
    return games::strategy_constant(static_cast<Symbol>(std::stol(m[1])));
  if (std::regex_match(name, m, table)) {
    const std::string path = m[1];
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read strategy table " + path);
    auto tbl = games::StrategyTable::read(in);
    if (io) io->inputs.push_back(path);
    return games::strategy_from_table(tbl, cfg, loss);
  }
  if (std::regex_match(name, m, scripted)) {
    std::vector<Symbol> moves;
    std::stringstream ss(m[1]);
    for (std::string tok; std::getline(ss, tok, ',');)
      if (!tok.empty()) moves.push_back(static_cast<Symbol>(std::stol(tok)));
    return strategy_scripted(std::move(moves));
  }
  if (name == "human") {
    if (!interactive)
      throw domain_error("strategy 'human' requires --mode interactive");
    throw domain_error("strategy 'human' is only available in the play subcommand");
  }
  throw domain_error("unknown strategy '" + name +
                     "'; expected random, constant<k>, copycat, mimic, "
                     "lookahead-16, lookahead-48, table:<path>, scripted:<a,b,..>, "
                     "or human");
}

// --- JSON renderings --------------------------------------------------------

ordered_json witness_json(const games::LossWitness& w) {
  ordered_json j;
  if (const auto* rep = std::get_if<words::Repetition>(&w)) {
    j["type"] = "repetition";
    j["start"] = rep->start;
    j["block_len"] = rep->block_len;
    j["blocks"] = rep->blocks;
  } else {
    const auto& pw = std::get<words::RepetitionWitness>(w);
    j["type"] = "pair";
    j["start_first"] = pw.start_first;
    j["start_second"] = pw.start_second;
    j["block_len"] = pw.block_len;
  }
  return j;
}

ordered_json report_json(const lll::BoundReport& r) {
  ordered_json j;
  j["name"] = r.name;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["value"] = r.value;
  j["ceil"] = r.ceil_value;
  j["margin"] = r.margin;
  ordered_json trace = ordered_json::array();
  for (const auto& [x, y] : r.trace) trace.push_back(ordered_json::array({x, y}));
  j["trace"] = trace;
  j["notes"] = r.notes;
  return j;
}

ordered_json config_json(const GameConfig& cfg, const std::string& loss_name) {
  return ordered_json{{"c", cfg.alphabet_size},
                      {"t", cfg.bias},
                      {"horizon", cfg.horizon},
                      {"loss", loss_name}};
}

// --- gen --------------------------------------------------------------------

struct GenOpts {
  std::string kind;
  std::uint64_t n = 0;
  std::string out;
  Common c;
};

int run_gen(GenOpts& o) {
  if (o.out.empty()) o.out = o.kind + "-" + std::to_string(o.n) + ".word";
  const std::uint64_t symbol_budget = resolve_budget(o.c.budget, kGenSymbolBudget);
  auto check_length = [&](std::uint64_t len) {
    if (len > symbol_budget)
      throw budget_error(o.kind + " of length " + std::to_string(len) +
                             " exceeds the generation budget of " +
                             std::to_string(symbol_budget) + " symbols",
                         len);
  };

  Word w;
  if (o.kind == "thue-morse") {
    if (o.n > 62) throw domain_error("thue-morse iteration count is too large");
    check_length(1ull << o.n);
    w = words::thue_morse(static_cast<int>(o.n));
  } else if (o.kind == "ternary") {
    if (o.n == 0) throw domain_error("ternary length must be >= 1");
    check_length(o.n);
    int iters = 2;
    while ((1ull << (iters - 1)) - 1 < o.n) ++iters;
    w = words::derive_ternary(words::thue_morse(iters)).prefix(o.n);
  } else if (o.kind == "four-ary-separated") {
    if (o.n == 0) throw domain_error("four-ary-separated length must be >= 1");
    check_length(o.n);
    w = games::four_ary_separated(o.n,
                                  resolve_budget(o.c.budget, games::kDefaultFourAryBudget));
  } else if (o.kind == "zimin") {
    if (o.n == 0 || o.n > 26) throw domain_error("zimin order must be in [1, 26]");
    check_length((1ull << o.n) - 1);
    w = words::zimin_word(static_cast<int>(o.n));
  } else {
    throw domain_error("unknown kind '" + o.kind +
                       "'; expected thue-morse, ternary, four-ary-separated, or zimin");
  }

  words::write_word_file(o.out, w);
  const std::string digest = digest_file(o.out);

  RunIo io;
  io.argv = {"gen", o.kind, std::to_string(o.n), "--out", o.out};
  push_common_tokens(io.argv, o.c);
  io.params = {{"kind", o.kind}, {"n", o.n}, {"out", o.out}};
  io.outputs.push_back(o.out);

  ordered_json result{{"schema", 1},         {"subcommand", "gen"},
                      {"kind", o.kind},      {"n", o.n},
                      {"length", w.size()},  {"alphabet", w.alphabet_size()},
                      {"digest", digest},    {"out", o.out}};
  return emit("gen", result, o.c, io, 0, [&](std::ostream& os) {
    os << "wrote " << o.out << ": length=" << w.size()
       << " alphabet=" << w.alphabet_size() << " digest=" << digest << "\n";
  });
}

// --- check ------------------------------------------------------------------

struct CheckOpts {
  std::string file;
  std::string property;
  std::size_t min_block = 1;
  int k = 3;
  std::size_t min_len = 1;
  double eps = 0.5;
  bool half_n = false;
  std::size_t n = 0, at = 0, at_least = 1;
  std::string pattern;
  std::size_t start = 0, len = 0, r = 0;
  Common c;
};

int run_check(CheckOpts& o) {
  const Word w = words::read_word_file(o.file);
  ordered_json property{{"name", o.property}};
  ordered_json witnesses = ordered_json::array();
  auto pair_json = [](const words::RepetitionWitness& pw) {
    return ordered_json{{"type", "pair"},
                        {"start_first", pw.start_first},
                        {"start_second", pw.start_second},
                        {"block_len", pw.block_len}};
  };
  auto rep_json = [](const words::Repetition& rep) {
    return ordered_json{{"type", "repetition"},
                        {"start", rep.start},
                        {"block_len", rep.block_len},
                        {"blocks", rep.blocks}};
  };
  auto ap_json = [](const words::APWitness& ap) {
    return ordered_json{{"type", "ap"},
                        {"start", ap.start},
                        {"difference", ap.difference},
                        {"terms", ap.terms},
                        {"kind", ap.kind == words::APKind::rainbow ? "rainbow" : "prismatic"}};
  };

  std::vector<std::string> argv{"check", o.file, o.property};
  const std::size_t ival_len = o.len > 0 ? o.len : w.size() - std::min(o.start, w.size());

  if (o.property == "square" || o.property == "cube" || o.property == "k-rep") {
    const int k = o.property == "square" ? 2 : o.property == "cube" ? 3 : o.k;
    property["k"] = k;
    property["min_block"] = o.min_block;
    if (o.property == "k-rep") {
      argv.push_back("--k");
      argv.push_back(std::to_string(k));
    }
    argv.push_back("--min-block");
    argv.push_back(std::to_string(o.min_block));
    if (auto rep = words::find_repetition(w, k, o.min_block)) witnesses.push_back(rep_json(*rep));
  } else if (o.property == "overlap") {
    if (auto pw = words::is_overlap_free(w)) witnesses.push_back(pair_json(*pw));
  } else if (o.property == "separation") {
    property["min_len"] = o.min_len;
    property["eps"] = o.eps;
    property["f"] = std::string("(2-eps)^(") + (o.half_n ? "n/2" : "(n-1)/2") + ")";
    argv.insert(argv.end(), {"--min-len", std::to_string(o.min_len), "--eps",
                             std::to_string(o.eps)});
    if (o.half_n) argv.push_back("--half-n");
    auto f = [&](std::size_t n) {
      const double e = o.half_n ? double(n) / 2.0 : (double(n) - 1.0) / 2.0;
      return std::pow(2.0 - o.eps, e);
    };
    for (const auto& pw : words::check_separation(w, o.min_len, f))
      witnesses.push_back(pair_json(pw));
  } else if (o.property == "adjacent-diff") {
    if (o.n == 0) throw domain_error("adjacent-diff requires --n (block length)");
    property["n"] = o.n;
    property["at"] = o.at;
    property["at_least"] = o.at_least;
    argv.insert(argv.end(), {"--n", std::to_string(o.n), "--at", std::to_string(o.at),
                             "--at-least", std::to_string(o.at_least)});
    const std::size_t d = words::adjacent_difference(w, o.n, o.at);
    property["distance"] = d;
    if (d < o.at_least)
      witnesses.push_back(ordered_json{
          {"type", "adjacent-diff"}, {"at", o.at}, {"n", o.n}, {"distance", d}});
  } else if (o.property == "pattern") {
    if (o.pattern.empty()) throw domain_error("pattern check requires --pattern");
    const auto pat = words::Pattern::parse(o.pattern);
    property["pattern"] = pat.to_letters();
    property["min_block"] = o.min_block;
    argv.insert(argv.end(), {"--pattern", o.pattern, "--min-block",
                             std::to_string(o.min_block)});
    const std::uint64_t budget = resolve_budget(o.c.budget, words::kDefaultPatternBudget);
    if (auto part = words::pattern_match(w, pat, o.min_block, budget)) {
      ordered_json pj{{"type", "partition"}, {"offset", part->offset}};
      pj["block_lengths"] = part->block_lengths;
      witnesses.push_back(pj);
    }
  } else if (o.property == "rainbow" || o.property == "prismatic") {
    if (o.r == 0) throw domain_error(o.property + " requires --r (difference)");
    property["start"] = o.start;
    property["len"] = ival_len;
    property["r"] = o.r;
    property["terms"] = o.k;
    argv.insert(argv.end(), {"--start", std::to_string(o.start), "--len",
                             std::to_string(ival_len), "--r", std::to_string(o.r),
                             "--k", std::to_string(o.k)});
    const auto ap = o.property == "rainbow"
                        ? words::find_rainbow_ap(w, o.start, ival_len, o.r, o.k)
                        : words::find_prismatic_pair(w, o.start, ival_len, o.r, o.k);
    if (ap) witnesses.push_back(ap_json(*ap));
  } else {
    throw domain_error("unknown property '" + o.property +
                       "'; expected square, cube, overlap, k-rep, separation, "
                       "adjacent-diff, pattern, rainbow, or prismatic");
  }

  const bool holds = witnesses.empty();
  RunIo io;
  io.argv = std::move(argv);
  push_common_tokens(io.argv, o.c);
  io.params = property;
  io.inputs.push_back(o.file);

  ordered_json result{{"schema", 1},
                      {"subcommand", "check"},
                      {"file", o.file},
                      {"word_length", w.size()},
                      {"alphabet", w.alphabet_size()},
                      {"property", property},
                      {"holds", holds},
                      {"witnesses", witnesses}};
  return emit("check", result, o.c, io, holds ? 0 : 10, [&](std::ostream& os) {
    if (holds)
      os << o.property << " holds on " << o.file << " (length " << w.size() << ")\n";
    else
      os << o.property << " witness found on " << o.file << ": " << witnesses[0].dump()
         << "\n";
  });
}

// --- solve ------------------------------------------------------------------

struct SolveOpts {
  Symbol c_size = 3;
  int t = 1;
  std::string loss = "square-min2";
  std::size_t horizon = 18;
  std::string p2;
  std::string semantics = "survive";
  std::string table_out;
  Common c;
};

int run_solve(SolveOpts& o) {
  GameConfig cfg;
  cfg.alphabet_size = o.c_size;
  cfg.bias = o.t;
  cfg.horizon = o.horizon;
  LossSpec loss = parse_loss(o.loss);
  if (o.semantics != "survive" && o.semantics != "first-loss")
    throw domain_error("--value-semantics must be survive or first-loss");

  RunIo io;
  io.argv = {"solve",     "--c",       std::to_string(o.c_size),
             "--t",       std::to_string(o.t),
             "--loss",    o.loss,      "--horizon", std::to_string(o.horizon),
             "--value-semantics", o.semantics};
  if (!o.p2.empty()) {
    io.argv.push_back("--p2");
    io.argv.push_back(o.p2);
  }
  if (!o.table_out.empty()) {
    io.argv.push_back("--table-out");
    io.argv.push_back(o.table_out);
  }
  io.params = {{"c", o.c_size},       {"t", o.t},
               {"loss", o.loss},      {"horizon", o.horizon},
               {"p2", o.p2},          {"semantics", o.semantics}};

  Strategy p2;
  const Strategy* fixed = nullptr;
  if (!o.p2.empty()) {
    if (o.p2 == "random" || o.p2.rfind("scripted:", 0) == 0 || o.p2 == "human" ||
        o.p2.rfind("lookahead", 0) == 0)
      throw domain_error("--p2 must be a stateless deterministic strategy "
                         "(constant<k>, copycat, mimic, or table:<path>)");
    p2 = make_strategy(o.p2, 0, cfg, loss.cond, 0, false, &io);
    fixed = &p2;
  }

  const std::uint64_t budget = resolve_budget(o.c.budget, games::kDefaultSolverBudget);
  ordered_json result{{"schema", 1}, {"subcommand", "solve"},
                      {"config", config_json(cfg, o.loss)}};
  games::SolveResult res;
  try {
    res = games::solve_survival(cfg, loss.cond, budget, fixed);
  } catch (const budget_error& e) {
    result["error"] = "budget";
    result["message"] = e.what();
    result["nodes_explored"] = e.nodes_explored;
    result["best_proven"] = e.best_proven;
    push_common_tokens(io.argv, o.c);
    return emit("solve", result, o.c, io, 2, [&](std::ostream& os) {
      os << "budget exceeded after " << e.nodes_explored
         << " nodes; best proven survival " << e.best_proven << "\n";
    });
  }

  const std::size_t reported = o.semantics == "survive"
                                   ? res.value
                                   : (res.loss_forced ? res.first_loss : res.value);
  result["semantics"] = o.semantics;
  result["value"] = reported;
  result["survival_value"] = res.value;
  result["loss_forced"] = res.loss_forced;
  result["first_loss"] = res.loss_forced ? ordered_json(res.first_loss) : ordered_json(nullptr);
  result["nodes_explored"] = res.nodes_explored;
  result["table_entries"] = res.table.size();
  result["table_digest"] = res.table.digest();
  if (!o.p2.empty()) {
    result["p2"] = o.p2;
    // Complete rounds only: the longest full game is the largest multiple of
    // t+1 within the survivable prefix.
    const std::size_t round = static_cast<std::size_t>(o.t) + 1;
    result["longest_complete_game"] = res.value - res.value % round;
  }
  if (!o.table_out.empty()) {
    std::ofstream out(o.table_out, std::ios::binary);
    if (!out) throw io_error("cannot write " + o.table_out);
    res.table.write(out);
    if (!out) throw io_error("write failed for " + o.table_out);
    result["table_out"] = o.table_out;
    io.outputs.push_back(o.table_out);
  }

  push_common_tokens(io.argv, o.c);
  return emit("solve", result, o.c, io, 0, [&](std::ostream& os) {
    os << "value=" << reported << " (" << o.semantics
       << " semantics; survival=" << res.value;
    if (res.loss_forced) os << ", first loss at move " << res.first_loss;
    os << ", nodes=" << res.nodes_explored << ")\n";
    if (result.contains("longest_complete_game"))
      os << "longest complete game vs " << o.p2 << ": "
         << result["longest_complete_game"].get<std::size_t>() << " moves\n";
  });
}

// --- play -------------------------------------------------------------------

struct PlayOpts {
  std::string mode = "batch";
  std::string p1 = "random", p2 = "random";
  Symbol c_size = 3;
  int t = 1;
  std::string loss = "square-min2";
  std::size_t horizon = 40;
  Common c;
};

int run_play(PlayOpts& o) {
  if (o.mode != "batch" && o.mode != "interactive")
    throw domain_error("--mode must be batch or interactive");
  if (o.p1 == "human" && o.p2 == "human")
    throw domain_error("only one side can be human");
  const bool interactive = o.mode == "interactive";
  GameConfig cfg;
  cfg.alphabet_size = o.c_size;
  cfg.bias = o.t;
  cfg.horizon = o.horizon;
  LossSpec loss = parse_loss(o.loss);

  const std::uint64_t seed = resolve_seed(o.c.seed);
  std::uint64_t seed_state = seed;
  const std::uint64_t p1_seed = splitmix64(seed_state);
  const std::uint64_t p2_seed = splitmix64(seed_state);
  const std::uint64_t budget = resolve_budget(o.c.budget, games::kDefaultFourAryBudget);

  RunIo io;
  io.seed = seed;

  // Shared buffers so human moves land in the manifest.
  auto human_log = std::make_shared<std::vector<Symbol>>();
  auto build = [&](const std::string& name, std::uint64_t s) {
    if (name == "human") {
      if (!interactive) throw domain_error("strategy 'human' requires --mode interactive");
      return strategy_human(human_log);
    }
    return make_strategy(name, s, cfg, loss.cond, budget, interactive, &io);
  };
  Strategy p1 = build(o.p1, p1_seed);
  Strategy p2 = build(o.p2, p2_seed);

  games::Transcript tr = games::play(cfg, p1, p2, loss.cond);
  io.human_moves = *human_log;

  // Interactive runs record a scripted stand-in so the manifest replays.
  auto replay_name = [&](const std::string& name) {
    return name == "human" ? "scripted:" + join_symbols(*human_log) : name;
  };
  io.argv = {"play",      "--mode",  "batch",
             "--p1",      replay_name(o.p1),
             "--p2",      replay_name(o.p2),
             "--c",       std::to_string(o.c_size),
             "--t",       std::to_string(o.t),
             "--loss",    o.loss,
             "--horizon", std::to_string(o.horizon),
             "--seed",    std::to_string(seed)};
  push_common_tokens(io.argv, o.c);
  io.params = {{"mode", o.mode}, {"p1", o.p1},           {"p2", o.p2},
               {"c", o.c_size},  {"t", o.t},             {"loss", o.loss},
               {"horizon", o.horizon}, {"seed", seed}};

  ordered_json result{{"schema", 1},
                      {"subcommand", "play"},
                      {"mode", o.mode},
                      {"config", config_json(cfg, o.loss)},
                      {"p1", o.p1},
                      {"p2", o.p2},
                      {"seed", seed},
                      {"word", tr.word.to_text()},
                      {"moves", tr.word.size()}};
  if (tr.loss) {
    result["loss"] = ordered_json{{"move", tr.first_loss_move},
                                  {"witness", witness_json(*tr.loss)},
                                  {"description", tr.loss_description}};
  } else {
    result["loss"] = nullptr;
  }

  return emit("play", result, o.c, io, 0, [&](std::ostream& os) {
    os << "game word (" << tr.word.size() << " moves): " << tr.word.to_text() << "\n";
    if (tr.loss)
      os << "loss at move " << tr.first_loss_move << ": " << tr.loss_description
         << " " << witness_json(*tr.loss).dump() << "\n";
    else
      os << "no loss within the horizon\n";
  });
}

// --- mc ---------------------------------------------------------------------

struct McOpts {
  Symbol c_size = 3;
  int t = 1;
  std::string loss = "square-min2";
  std::string adversary = "random";
  std::size_t horizon = 200;
  std::uint64_t trials = 1000;
  Common c;
};

int run_mc(McOpts& o) {
  GameConfig cfg;
  cfg.alphabet_size = o.c_size;
  cfg.bias = o.t;
  cfg.horizon = o.horizon;
  LossSpec loss = parse_loss(o.loss);
  const std::uint64_t seed = resolve_seed(o.c.seed);

  games::AdversaryFactory factory;
  std::smatch m;
  static const std::regex constant{R"(constant(\d+))"};
  if (o.adversary == "random") {
    factory = [](std::uint64_t s) { return games::strategy_random(s); };
  } else if (o.adversary == "copycat") {
    factory = [](std::uint64_t) { return games::strategy_copycat(); };
  } else if (o.adversary == "mimic") {
    factory = [](std::uint64_t) { return games::strategy_mimic_plus_one(); };
  } else if (std::regex_match(o.adversary, m, constant)) {
    const Symbol s = static_cast<Symbol>(std::stol(m[1]));
    factory = [s](std::uint64_t) { return games::strategy_constant(s); };
  } else {
    throw domain_error("unknown adversary '" + o.adversary +
                       "'; expected random, constant<k>, copycat, or mimic");
  }

  const games::MonteCarloStats stats =
      games::monte_carlo(cfg, factory, loss.cond, o.trials, seed);

  RunIo io;
  io.seed = seed;
  io.argv = {"mc",
             "--c", std::to_string(o.c_size),
             "--t", std::to_string(o.t),
             "--loss", o.loss,
             "--adversary", o.adversary,
             "--horizon", std::to_string(o.horizon),
             "--trials", std::to_string(o.trials),
             "--seed", std::to_string(seed)};
  push_common_tokens(io.argv, o.c);
  io.params = {{"c", o.c_size},     {"t", o.t},
               {"loss", o.loss},    {"adversary", o.adversary},
               {"horizon", o.horizon}, {"trials", o.trials},
               {"seed", seed}};

  ordered_json blocks = ordered_json::object();
  for (const auto& [len, count] : stats.witness_block_lengths)
    blocks[std::to_string(len)] = count;
  ordered_json result{{"schema", 1},
                      {"subcommand", "mc"},
                      {"config", config_json(cfg, o.loss)},
                      {"adversary", o.adversary},
                      {"trials", stats.trials},
                      {"seed", seed},
                      {"losses", stats.losses},
                      {"loss_frequency", stats.loss_frequency},
                      {"mean_survival", stats.mean_survival},
                      {"min_survival", stats.min_survival},
                      {"max_survival", stats.max_survival},
                      {"witness_block_lengths", blocks}};
  return emit("mc", result, o.c, io, 0, [&](std::ostream& os) {
    os << "trials=" << stats.trials << " losses=" << stats.losses
       << " loss_frequency=" << stats.loss_frequency
       << " mean_survival=" << stats.mean_survival << " min=" << stats.min_survival
       << " max=" << stats.max_survival << "\n";
  });
}

// --- bound ------------------------------------------------------------------

struct BoundOpts {
  std::string name;
  std::size_t k = 2;
  std::size_t t = 1;
  double a = 0, b = 0, cval = 0;
  double eps = 0;
  bool optimize = false;
  std::string chain;
  std::uint64_t N = 0;
  bool find_least_N = false;
  std::size_t scan_lo = 0, scan_hi = 0;
  bool f_half_n = false;
  Common c;
};

int run_bound(BoundOpts& o) {
  lll::BoundReport rep;
  std::vector<std::string> argv{"bound", o.name};
  auto push = [&argv](const std::string& flag, const std::string& v) {
    argv.push_back(flag);
    argv.push_back(v);
  };

  if (o.name == "ck") {
    push("--k", std::to_string(o.k));
    if (o.optimize) {
      argv.push_back("--optimize");
      rep = lll::minimize_Ck(o.k);
    } else {
      const double a = o.a != 0 ? o.a : lll::optimal_ak(o.k);
      push("--a", std::to_string(a));
      rep = lll::bound_Ck(o.k, a);
    }
  } else if (o.name == "ct") {
    push("--t", std::to_string(o.t));
    if (o.optimize) {
      argv.push_back("--optimize");
      rep = lll::minimize_Ct(o.t);
    } else {
      const double td = static_cast<double>(o.t);
      const double a = o.a != 0 ? o.a : (o.t == 1 ? 0.0514 : std::pow(td, -2.5));
      const double b = o.b != 0 ? o.b : (o.t == 1 ? 0.0426 : 1.0 / (3.0 * td * td));
      push("--a", std::to_string(a));
      push("--b", std::to_string(b));
      rep = lll::bound_Ct(o.t, a, b);
    }
  } else if (o.name == "pattern") {
    if (o.optimize) {
      argv.push_back("--optimize");
      rep = lll::minimize_pattern();
    } else {
      const double b = o.b != 0 ? o.b : 0.045;
      push("--b", std::to_string(b));
      rep = lll::bound_pattern(b);
    }
  } else if (o.name == "alpha") {
    push("--eps", std::to_string(o.eps));
    rep = lll::binomial_alpha(o.eps);
  } else if (o.name == "chain") {
    if (o.chain.empty())
      throw domain_error("bound chain requires --chain <name>");
    lll::ChainParams params;
    params.eps = o.eps;
    params.t = o.t;
    params.k = o.k;
    params.a = o.a;
    params.b = o.b;
    params.c = o.cval;
    params.N = o.N;
    params.find_least_N = o.find_least_N;
    params.scan_lo = o.scan_lo;
    params.scan_hi = o.scan_hi;
    params.f_exponent_half_n = o.f_half_n;
    rep = lll::verify_chain(lll::chain_id_from_string(o.chain), params);
    push("--chain", o.chain);
    if (o.eps != 0) push("--eps", std::to_string(o.eps));
    push("--t", std::to_string(o.t));
    push("--k", std::to_string(o.k));
    if (o.a != 0) push("--a", std::to_string(o.a));
    if (o.b != 0) push("--b", std::to_string(o.b));
    if (o.cval != 0) push("--c", std::to_string(o.cval));
    if (o.N != 0) push("--N", std::to_string(o.N));
    if (o.find_least_N) argv.push_back("--find-least-N");
    if (o.scan_lo != 0) push("--scan-lo", std::to_string(o.scan_lo));
    if (o.scan_hi != 0) push("--scan-hi", std::to_string(o.scan_hi));
    if (o.f_half_n) argv.push_back("--f-half-n");
  } else {
    throw domain_error("unknown bound '" + o.name +
                       "'; expected ck, ct, pattern, alpha, or chain");
  }

  RunIo io;
  io.argv = std::move(argv);
  push_common_tokens(io.argv, o.c);
  const ordered_json rj = report_json(rep);
  io.params = rj["params"];

  ordered_json result = ordered_json{{"schema", 1}, {"subcommand", "bound"}};
  for (const auto& [key, value] : rj.items()) result[key] = value;
  return emit("bound", result, o.c, io, 0, [&](std::ostream& os) {
    os << rep.name << ": value=" << rep.value << " ceil=" << rep.ceil_value
       << " margin=" << rep.margin << "\n";
    for (const auto& n : rep.notes) os << "  note: " << n << "\n";
  });
}

// --- replay -----------------------------------------------------------------

struct ReplayOpts {
  std::string manifest;
};

int run_replay(ReplayOpts& o) {
  std::ifstream in(o.manifest, std::ios::binary);
  if (!in) throw io_error("cannot read manifest " + o.manifest);
  ordered_json m;
  try {
    in >> m;
  } catch (const std::exception& e) {
    throw io_error("manifest parse failed: " + std::string(e.what()));
  }
  if (!m.contains("schema") || m["schema"].get<int>() != 1 ||
      m.value("tool", "") != "thuelab")
    throw domain_error("not a thuelab manifest (schema 1 expected)");

  for (const auto& [path, digest] : m.at("input_digests").items()) {
    const std::string current = digest_file(path);
    if (current != digest.get<std::string>())
      throw domain_error("input digest mismatch for " + path + ": expected " +
                         digest.get<std::string>() + ", found " + current);
  }

  const std::vector<std::string> argv = m.at("argv").get<std::vector<std::string>>();
  const int rc = run_cli(argv);

  for (const auto& entry : m.at("outputs")) {
    const std::string path = entry.at("path").get<std::string>();
    const std::string expected = entry.at("digest").get<std::string>();
    const std::string current = digest_file(path);
    if (current != expected)
      throw domain_error("replay output mismatch for " + path + ": expected " +
                         expected + ", produced " + current);
  }
  std::cerr << "replay ok: " << m.at("outputs").size() << " output(s) verified\n";
  return rc;
}

// --- driver -----------------------------------------------------------------

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"nonrepetitive words, biased games, and probabilistic bounds"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* sub_gen = app.add_subcommand("gen", "generate a word file");
  sub_gen->add_option("kind", gen.kind, "thue-morse | ternary | four-ary-separated | zimin")
      ->required();
  sub_gen->add_option("n", gen.n, "iterations (thue-morse), order (zimin), or length")
      ->required();
  sub_gen->add_option("--out", gen.out, "word file path (default <kind>-<n>.word)");
  add_common(sub_gen, gen.c, false, true, /*with_out=*/false);

  CheckOpts chk;
  auto* sub_check = app.add_subcommand("check", "check a word property");
  sub_check->add_option("file", chk.file, "word file")->required();
  sub_check
      ->add_option("property", chk.property,
                   "square | cube | overlap | k-rep | separation | adjacent-diff "
                   "| pattern | rainbow | prismatic")
      ->required();
  sub_check->add_option("--min-block", chk.min_block, "minimum block length");
  sub_check->add_option("--k", chk.k, "block count (k-rep) or AP terms");
  sub_check->add_option("--min-len", chk.min_len, "separation: minimum block length");
  sub_check->add_option("--eps", chk.eps, "separation: eps in (2-eps)^exponent");
  sub_check->add_flag("--half-n", chk.half_n, "separation exponent n/2 instead of (n-1)/2");
  sub_check->add_option("--n", chk.n, "adjacent-diff: block length");
  sub_check->add_option("--at", chk.at, "adjacent-diff: block start offset");
  sub_check->add_option("--at-least", chk.at_least, "adjacent-diff: required distance");
  sub_check->add_option("--pattern", chk.pattern, "pattern letters, e.g. xyx");
  sub_check->add_option("--start", chk.start, "interval start (rainbow/prismatic)");
  sub_check->add_option("--len", chk.len, "interval length (0 = to end of word)");
  sub_check->add_option("--r", chk.r, "progression difference");
  add_common(sub_check, chk.c, false, true);

  SolveOpts sol;
  auto* sub_solve = app.add_subcommand("solve", "exact survival value of a game");
  sub_solve->add_option("--c", sol.c_size, "alphabet size");
  sub_solve->add_option("--t", sol.t, "bias (Player 2 moves per round)");
  sub_solve->add_option("--loss", sol.loss, "loss condition");
  sub_solve->add_option("--horizon", sol.horizon, "maximum game length");
  sub_solve->add_option("--p2", sol.p2, "fix Player 2 to this strategy");
  sub_solve->add_option("--value-semantics", sol.semantics,
                        "survive (last safe move) | first-loss (first forced loss)");
  sub_solve->add_option("--table-out", sol.table_out, "write the move table here");
  add_common(sub_solve, sol.c, false, true);

  PlayOpts ply;
  auto* sub_play = app.add_subcommand("play", "play one game");
  sub_play->add_option("--mode", ply.mode, "batch | interactive");
  sub_play->add_option("--p1", ply.p1, "Player 1 strategy");
  sub_play->add_option("--p2", ply.p2, "Player 2 strategy (or human, interactive only)");
  sub_play->add_option("--c", ply.c_size, "alphabet size");
  sub_play->add_option("--t", ply.t, "bias");
  sub_play->add_option("--loss", ply.loss, "loss condition");
  sub_play->add_option("--horizon", ply.horizon, "maximum game length");
  add_common(sub_play, ply.c, true, true);

  McOpts mc;
  auto* sub_mc = app.add_subcommand("mc", "Monte-Carlo survival statistics");
  sub_mc->add_option("--c", mc.c_size, "alphabet size");
  sub_mc->add_option("--t", mc.t, "bias");
  sub_mc->add_option("--loss", mc.loss, "loss condition");
  sub_mc->add_option("--adversary", mc.adversary, "Player 2 factory");
  sub_mc->add_option("--horizon", mc.horizon, "maximum game length");
  sub_mc->add_option("--trials", mc.trials, "number of games");
  add_common(sub_mc, mc.c, true, false);

  BoundOpts bnd;
  auto* sub_bound = app.add_subcommand("bound", "evaluate a bound or proof chain");
  sub_bound->add_option("name", bnd.name, "ck | ct | pattern | alpha | chain")->required();
  sub_bound->add_option("--k", bnd.k, "color/alphabet parameter k");
  sub_bound->add_option("--t", bnd.t, "bias parameter t");
  sub_bound->add_option("--a", bnd.a, "weight a");
  sub_bound->add_option("--b", bnd.b, "weight b");
  sub_bound->add_option("--c", bnd.cval, "alphabet size in a chain");
  sub_bound->add_option("--eps", bnd.eps, "eps (alpha: eps0; chains: game eps)");
  sub_bound->add_flag("--optimize", bnd.optimize, "minimize over the weight domain");
  sub_bound->add_option("--chain", bnd.chain,
                        "beck_game | adjacent | rainbow | sblocks_A | sblocks_B | pattern");
  sub_bound->add_option("--N", bnd.N, "block-length cutoff (0 = search)");
  sub_bound->add_flag("--find-least-N", bnd.find_least_N, "search the least valid cutoff");
  sub_bound->add_option("--scan-lo", bnd.scan_lo, "scan start (0 = default)");
  sub_bound->add_option("--scan-hi", bnd.scan_hi, "scan end (0 = default)");
  sub_bound->add_flag("--f-half-n", bnd.f_half_n,
                      "beck_game separation exponent n/2 instead of (n-1)/2");
  add_common(sub_bound, bnd.c, false, false);

  ReplayOpts rep;
  auto* sub_replay = app.add_subcommand("replay", "re-run a recorded manifest");
  sub_replay->add_option("manifest", rep.manifest, "manifest JSON path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (sub_gen->parsed()) return run_gen(gen);
  if (sub_check->parsed()) return run_check(chk);
  if (sub_solve->parsed()) return run_solve(sol);
  if (sub_play->parsed()) return run_play(ply);
  if (sub_mc->parsed()) return run_mc(mc);
  if (sub_bound->parsed()) return run_bound(bnd);
  if (sub_replay->parsed()) return run_replay(rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run_cli(args);
  } catch (const budget_error& e) {
    ordered_json j{{"schema", 1},
                   {"error", "budget"},
                   {"message", e.what()},
                   {"nodes_explored", e.nodes_explored},
                   {"best_proven", e.best_proven}};
    std::cout << j.dump(2) << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
