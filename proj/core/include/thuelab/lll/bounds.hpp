#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace thuelab::lll {

/// Shared result shape for bound evaluations, optimizers, and chain checks.
/// `margin` is the LHS-RHS gap of whichever inequality governs the report;
/// each producer documents its reading. `trace` lists evaluated points.
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  double value = 0.0;
  double ceil_value = 0.0;
  double margin = 0.0;
  std::vector<std::pair<double, double>> trace;
  std::vector<std::string> notes;
};

/// Closed-form minimizer of the simplified k-block constant over the weight a.
double optimal_ak(std::size_t k);

/// Constant for the k-nonrepetitive game at weight a: value is
/// binom(k,2) phi(a)^{-6k} / a, and margin is the simplified upper form
/// (1-a-a^2)^{-6k} k(k-1) / (2a) minus the value (nonnegative on the domain).
/// Requires k >= 2 and 0 < a <= 1/k.
BoundReport bound_Ck(std::size_t k, double a);

/// Minimizes the simplified form by golden-section search on (0, 1/k];
/// params carry the numeric argmin and the closed-form argmin for comparison.
BoundReport minimize_Ck(std::size_t k);

/// Constant for total-length repetition thresholds in the biased game:
/// value = max of a^{-1} base^{-(2t+1)(2t+2)} and (3t/2) b^{-1} base^{-3t^2-3}
/// with base = (1-b)(1-a-a^2). margin = first term minus second (its sign
/// says which side binds). Requires t >= 1, a and b in (0,1), base > 0.
BoundReport bound_Ct(std::size_t t, double a, double b);

/// Deterministic 2-D grid search with local refinement over (a, b).
BoundReport minimize_Ct(std::size_t t);

/// Pattern-game constant C(b) = 8 (1-b)^6 / (b phi(b)^24) for 0 < b <= 1/2.
/// margin = ceil - value (slack to the reported integer).
BoundReport bound_pattern(double b);

/// Golden-section minimization of C(b) over (0, 1/2].
BoundReport minimize_pattern();

/// alpha = 1 / sqrt(1 + 4 eps0^2), with the verification that
/// binom(N, ceil((1/2 + eps0) N)) <= (2 alpha)^N for every N <= 60, using
/// exact integer binomials. value = alpha; margin = the worst log-space gap
/// N ln(2 alpha) - ln binom over those N (nonnegative means all pass);
/// trace holds (N, gap) pairs. Accepts eps0 >= 0.
BoundReport binomial_alpha(double eps0);

/// Exact binomial coefficient for n <= 62 (fits in 64 bits).
std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace thuelab::lll
