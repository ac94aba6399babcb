#pragma once

#include <cstdint>
#include <string>

#include "thuelab/lll/bounds.hpp"

namespace thuelab::lll {

/// The key inequality of each proof, checked numerically at given parameters.
enum class ChainId { beck_game, adjacent, rainbow, sblocks_A, sblocks_B, pattern };

ChainId chain_id_from_string(const std::string& name);
std::string to_string(ChainId id);

struct ChainParams {
  double eps = 0.0;    // beck_game, adjacent
  std::size_t t = 1;   // adjacent, sblocks_A, sblocks_B
  std::size_t k = 2;   // rainbow
  double a = 0.0;      // weight; 0 picks a documented default
  double b = 0.0;      // weight; 0 picks a documented default
  double c = 0.0;      // alphabet size; 0 picks the smallest the bound allows
  std::size_t N = 0;   // block-length cutoff for beck_game / adjacent
  bool find_least_N = false;
  std::size_t scan_lo = 0, scan_hi = 0;  // scan range; 0 keeps the chain default
  bool f_exponent_half_n = false;  // beck_game: separation (2-eps)^{n/2} not (n-1)/2
};

/// Evaluates the chain's final comparison over the scan range in log space and
/// reports the worst margin (LHS-RHS; nonnegative means the chain holds).
/// `value` is the scan point attaining the worst margin, or the least N making
/// the chain hold for all later points when find_least_N is set (0 if none is
/// found within the scan cap). Behavior past the scan cap is settled by an
/// exact per-period increment argument recorded in the notes. A fixed 1e-9
/// allowance for series truncation is subtracted from every margin.
///
/// Parameter defaults when a, b, or c is 0: rainbow takes a = optimal_ak(k)
/// and c = ceil(bound_Ck); sblocks take a = 0.0514, b = 0.0426 at t = 1 and
/// a = t^{-5/2}, b = 1/(3 t^2) otherwise, with c = ceil(bound_Ct); pattern
/// takes b = 0.045 and c = ceil(bound_pattern); adjacent takes
/// b = alpha^{1/(2t+2)}. N = 0 on a cutoff chain searches for the least
/// admissible N. Scan defaults: r0/n0 up to 500 for the ranged chains, 10^4
/// for the cutoff chains.
BoundReport verify_chain(ChainId id, const ChainParams& params);

}  // namespace thuelab::lll
