#include "thuelab/lll/chains.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "thuelab/errors.hpp"
#include "thuelab/lll/qseries.hpp"

namespace thuelab::lll {

namespace {

// Subtracted from every margin so q-series truncation can never flip a sign.
constexpr double kAllowance = 1e-9;
constexpr std::size_t kRangedCap = 500;
constexpr std::size_t kCutoffCap = 10000;
// Stands in for the log of a nonpositive quantity in a vacuous regime.
constexpr double kVacuousMargin = -1e12;

void require(bool ok, const char* msg) {
  if (!ok) throw domain_error(msg);
}

double log_phi(double q) { return std::log(euler_phi(q)); }

std::string allowance_note() {
  std::ostringstream os;
  os << "margins include a -" << kAllowance << " allowance for series truncation";
  return os.str();
}

struct Scan {
  double worst = std::numeric_limits<double>::infinity();
  std::size_t worst_at = 0;
  std::vector<std::pair<double, double>> trace;
};

template <typename MarginFn>
Scan scan_margin(std::size_t lo, std::size_t hi, MarginFn&& margin) {
  Scan s;
  const std::size_t stride = std::max<std::size_t>(1, (hi - lo) / 64 + 1);
  for (std::size_t p = lo; p <= hi; ++p) {
    const double m = margin(p) - kAllowance;
    if (m < s.worst) {
      s.worst = m;
      s.worst_at = p;
    }
    if ((p - lo) % stride == 0 || p == hi) s.trace.emplace_back(double(p), m);
  }
  return s;
}

// The scanned margins are periodic plus a linear drift, so one positive
// per-period increment extends a fully positive scan to every later point.
void note_period_tail(BoundReport& r, std::size_t period, double increment,
                      bool scan_positive) {
  std::ostringstream os;
  os << "per-period (+" << period << ") margin increment is " << increment;
  if (increment > 0 && scan_positive) {
    os << "; with the scanned margins positive the inequality holds at every "
          "later point as well";
  } else {
    os << "; the inequality is verified on the scanned range only";
  }
  r.notes.push_back(os.str());
}

BoundReport chain_rainbow(const ChainParams& p) {
  require(p.k >= 2, "rainbow chain requires k >= 2");
  const double a = p.a != 0 ? p.a : optimal_ak(p.k);
  require(a > 0 && a < 1, "rainbow chain requires a in (0,1)");
  const double c = p.c != 0 ? p.c : std::ceil(bound_Ck(p.k, a).value);
  require(c >= 1, "rainbow chain requires c >= 1");
  const double pairs = 0.5 * double(p.k) * double(p.k - 1);
  const double lphi = log_phi(a);
  const double per_pair = std::log(a) + std::log(c) - std::log(pairs);
  const std::size_t lo = p.scan_lo ? p.scan_lo : 2;
  const std::size_t hi = p.scan_hi ? p.scan_hi : kRangedCap;
  require(lo <= hi, "scan range is empty");

  Scan s = scan_margin(lo, hi, [&](std::size_t r0) {
    return std::floor(double(r0) / 2.0) * per_pair +
           2.0 * double(p.k) * double(r0) * lphi;
  });
  const double inc = per_pair + 4.0 * double(p.k) * lphi;

  BoundReport r;
  r.name = "chain-rainbow";
  r.params = {{"k", double(p.k)}, {"a", a}, {"c", c}};
  r.value = double(s.worst_at);
  r.ceil_value = static_cast<std::int64_t>(s.worst_at);
  r.margin = s.worst;
  r.trace = std::move(s.trace);
  r.notes.push_back(allowance_note());
  note_period_tail(r, 2, inc, s.worst > 0);
  return r;
}

BoundReport chain_sblocks(const ChainParams& p, bool variant_B) {
  require(p.t >= 1, "separated-blocks chains require t >= 1");
  const double t = double(p.t);
  double a = p.a, b = p.b;
  if (a == 0) a = p.t == 1 ? 0.0514 : std::pow(t, -2.5);
  if (b == 0) b = p.t == 1 ? 0.0426 : 1.0 / (3.0 * t * t);
  require(a > 0 && a < 1, "separated-blocks chains require a in (0,1)");
  require(b > 0 && b < 1, "separated-blocks chains require b in (0,1)");
  const double c = p.c != 0 ? p.c : std::ceil(bound_Ct(p.t, a, b).value);
  require(c >= 1, "separated-blocks chains require c >= 1");
  const double lbase = std::log1p(-b) + log_phi(a);

  BoundReport r;
  r.params = {{"t", t}, {"a", a}, {"b", b}, {"c", c}};
  r.notes.push_back(allowance_note());

  if (variant_B) {
    // Single comparison: b * base^(3t^2+3) against (3t/2) / c.
    const double exponent = 3.0 * t * t + 3.0;
    const double margin =
        std::log(b) + exponent * lbase - std::log(3.0 * t) + std::log(2.0 * c) -
        kAllowance;
    r.name = "chain-sblocks_B";
    r.value = margin;
    r.ceil_value = static_cast<std::int64_t>(std::ceil(margin));
    r.margin = margin;
    r.trace = {{exponent, margin}};
    return r;
  }

  const double per_period = std::log(a) + std::log(c);
  const std::size_t lo = p.scan_lo ? p.scan_lo : (3 * p.t + 2) / 2;
  const std::size_t hi = p.scan_hi ? p.scan_hi : kRangedCap;
  require(lo <= hi, "scan range is empty");

  Scan s = scan_margin(lo, hi, [&](std::size_t r0) {
    return std::floor(double(r0) / (t + 1.0)) * per_period +
           2.0 * (t + 1.0) * double(r0) * lbase;
  });
  const double inc = per_period + 2.0 * (t + 1.0) * (t + 1.0) * lbase;

  r.name = "chain-sblocks_A";
  r.value = double(s.worst_at);
  r.ceil_value = static_cast<std::int64_t>(s.worst_at);
  r.margin = s.worst;
  r.trace = std::move(s.trace);
  note_period_tail(r, p.t + 1, inc, s.worst > 0);
  return r;
}

BoundReport chain_pattern(const ChainParams& p) {
  const double b = p.b != 0 ? p.b : 0.045;
  require(b > 0 && b < 0.5, "pattern chain requires b in (0, 0.5)");
  const double c = p.c != 0 ? p.c : std::ceil(bound_pattern(b).value);
  require(c >= 1, "pattern chain requires c >= 1");
  const double lphi = log_phi(b);
  const double per_event = std::log(b) - std::log(8.0 / c);
  const std::size_t lo = p.scan_lo ? p.scan_lo : 4;
  const std::size_t hi = p.scan_hi ? p.scan_hi : kRangedCap;
  require(lo <= hi, "scan range is empty");

  Scan s = scan_margin(lo, hi, [&](std::size_t n0) {
    const double events = std::floor(std::ceil(double(n0) / 2.0) / 2.0);
    return events * per_event + 4.0 * double(n0) * lphi -
           double(n0) * std::log1p(-b);
  });
  const double inc = per_event + 16.0 * lphi - 4.0 * std::log1p(-b);

  BoundReport r;
  r.name = "chain-pattern";
  r.params = {{"b", b}, {"c", c}};
  r.value = double(s.worst_at);
  r.ceil_value = static_cast<std::int64_t>(s.worst_at);
  r.margin = s.worst;
  r.trace = std::move(s.trace);
  r.notes.push_back(allowance_note());
  note_period_tail(r, 4, inc, s.worst > 0);
  return r;
}

// Shared shape of the two cutoff chains: a per-point margin parameterized by
// the cutoff N, a lower bound on the margin increment past the scan cap, and
// an optional search for the least N that makes everything positive.
struct CutoffChain {
  std::function<double(std::size_t n0, std::size_t N)> margin;
  std::function<double(std::size_t N, std::size_t cap)> tail_increment;
  std::function<bool(std::size_t N)> admissible;  // margin defined at this N
  std::size_t period = 1;
  std::size_t min_N = 2;
};

BoundReport run_cutoff_chain(const ChainParams& p, const CutoffChain& chain,
                             const char* name,
                             std::vector<std::pair<std::string, double>> params) {
  const std::size_t cap = p.scan_hi ? p.scan_hi : kCutoffCap;

  auto scan_at = [&](std::size_t N) {
    const std::size_t lo = std::max(p.scan_lo, std::max(N, chain.min_N));
    return scan_margin(std::min(lo, cap), cap,
                       [&](std::size_t n0) { return chain.margin(n0, N); });
  };
  auto holds_at = [&](std::size_t N) {
    if (!chain.admissible(N)) return false;
    if (chain.tail_increment(N, cap) <= 0) return false;
    return scan_at(N).worst > 0;
  };

  BoundReport r;
  r.name = name;
  r.params = std::move(params);
  r.notes.push_back(allowance_note());

  std::size_t N = p.N;
  if (p.find_least_N || p.N == 0) {
    if (!holds_at(cap)) {
      r.params.emplace_back("N", 0.0);
      r.value = 0;
      r.ceil_value = 0;
      r.margin = kVacuousMargin;
      std::ostringstream os;
      os << "no cutoff N <= " << cap << " makes every scanned margin positive";
      r.notes.push_back(os.str());
      return r;
    }
    std::size_t bad = chain.min_N - 1, good = cap;
    while (good - bad > 1) {
      const std::size_t mid = bad + (good - bad) / 2;
      (holds_at(mid) ? good : bad) = mid;
    }
    N = good;
  }
  require(chain.admissible(N), "cutoff N is outside the admissible range");

  Scan s = scan_at(N);
  const double inc = chain.tail_increment(N, cap);
  r.params.emplace_back("N", double(N));
  r.value = double(N);
  r.ceil_value = static_cast<std::int64_t>(N);
  r.margin = s.worst;
  r.trace = std::move(s.trace);
  {
    std::ostringstream os;
    os << "per-period (+" << chain.period << ") increment past the scan cap is at least "
       << inc;
    if (inc > 0 && s.worst > 0) {
      os << "; with the scanned margins positive the inequality holds for every "
            "block length";
    } else {
      os << "; the inequality is verified on the scanned range only";
    }
    r.notes.push_back(os.str());
  }
  {
    const std::size_t probe2 = std::min(2 * N, cap);
    std::ostringstream os;
    os << "spot margins: " << chain.margin(N, N) - kAllowance << " at n0=" << N
       << ", " << chain.margin(probe2, N) - kAllowance << " at n0=" << probe2;
    r.notes.push_back(os.str());
  }
  return r;
}

BoundReport chain_beck(const ChainParams& p) {
  require(p.eps > 0 && p.eps < 1, "this chain requires eps in (0,1)");
  const double l2me = std::log(2.0 - p.eps);
  const bool half_n = p.f_exponent_half_n;

  CutoffChain chain;
  chain.period = 2;
  chain.min_N = 2;
  chain.admissible = [](std::size_t N) { return N >= 2; };
  chain.margin = [=](std::size_t n0, std::size_t N) {
    const double fe = half_n ? double(n0) / 2.0 : (double(n0) - 1.0) / 2.0;
    return -fe * l2me - 3.0 * std::log(double(n0)) +
           (2.0 * double(n0) + 2.0) * std::log1p(-1.0 / double(N)) +
           std::floor((double(n0) - 1.0) / 2.0) * std::log(2.0);
  };
  // Over n0 -> n0+2 the separation exponent and the halving count each gain
  // exactly 1 and the log term loses at most 6/n0.
  chain.tail_increment = [=](std::size_t N, std::size_t cap) {
    return -l2me + 4.0 * std::log1p(-1.0 / double(N)) + std::log(2.0) -
           6.0 / double(cap);
  };
  return run_cutoff_chain(p, chain, "chain-beck_game",
                          {{"eps", p.eps}, {"f_exponent_half_n", half_n ? 1.0 : 0.0}});
}

BoundReport chain_adjacent(const ChainParams& p) {
  require(p.t >= 1, "adjacent chain requires t >= 1");
  require(p.eps > 0, "adjacent chain requires eps > 0");
  const double t1 = double(p.t) + 1.0;
  const double eps0 = t1 * p.eps;
  const double alpha = 1.0 / std::sqrt(1.0 + 4.0 * eps0 * eps0);
  const double b = p.b != 0 ? p.b : std::pow(alpha, 1.0 / (2.0 * t1));
  require(b > 0 && b < 1, "adjacent chain requires b in (0,1)");
  const double lalpha = std::log(alpha);
  const double lb = std::log(b);

  auto tail_mass = [=](std::size_t N) {
    return std::pow(b, double(N)) / (1.0 - b);
  };

  CutoffChain chain;
  chain.period = 1;
  chain.min_N = 1;
  // The geometric tail over block lengths >= N must stay below 1 or the
  // weight product collapses; that regime is flagged, never clamped.
  chain.admissible = [=](std::size_t N) { return N >= 1 && tail_mass(N) < 1.0; };
  chain.margin = [=](std::size_t n0, std::size_t N) {
    const double tm = tail_mass(N);
    if (tm >= 1.0) return kVacuousMargin;
    return double(n0) * (lb + std::log1p(-tm)) - std::log(double(n0)) -
           double(n0) / t1 * lalpha;
  };
  chain.tail_increment = [=](std::size_t N, std::size_t cap) {
    const double tm = tail_mass(N);
    if (tm >= 1.0) return kVacuousMargin;
    return lb + std::log1p(-tm) - lalpha / t1 - 1.0 / double(cap);
  };

  return run_cutoff_chain(
      p, chain, "chain-adjacent",
      {{"t", double(p.t)}, {"eps", p.eps}, {"alpha", alpha}, {"b", b}});
}

}  // namespace

ChainId chain_id_from_string(const std::string& name) {
  if (name == "beck_game") return ChainId::beck_game;
  if (name == "adjacent") return ChainId::adjacent;
  if (name == "rainbow") return ChainId::rainbow;
  if (name == "sblocks_A") return ChainId::sblocks_A;
  if (name == "sblocks_B") return ChainId::sblocks_B;
  if (name == "pattern") return ChainId::pattern;
  throw domain_error(
      "unknown chain '" + name +
      "'; expected one of beck_game, adjacent, rainbow, sblocks_A, sblocks_B, pattern");
}

std::string to_string(ChainId id) {
  switch (id) {
    case ChainId::beck_game: return "beck_game";
    case ChainId::adjacent: return "adjacent";
    case ChainId::rainbow: return "rainbow";
    case ChainId::sblocks_A: return "sblocks_A";
    case ChainId::sblocks_B: return "sblocks_B";
    case ChainId::pattern: return "pattern";
  }
  throw domain_error("unknown chain id");
}

BoundReport verify_chain(ChainId id, const ChainParams& params) {
  switch (id) {
    case ChainId::beck_game: return chain_beck(params);
    case ChainId::adjacent: return chain_adjacent(params);
    case ChainId::rainbow: return chain_rainbow(params);
    case ChainId::sblocks_A: return chain_sblocks(params, false);
    case ChainId::sblocks_B: return chain_sblocks(params, true);
    case ChainId::pattern: return chain_pattern(params);
  }
  throw domain_error("unknown chain id");
}

}  // namespace thuelab::lll
