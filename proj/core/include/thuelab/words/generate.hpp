#pragma once

#include "thuelab/errors.hpp"
#include "thuelab/words/word.hpp"

namespace thuelab::words {

/// Raised when derive_ternary meets a 1-run of length ≥ 3 (input not cube-free).
class cube_error : public domain_error {
public:
  cube_error(std::size_t zero_index, std::size_t run_length)
      : domain_error("run of " + std::to_string(run_length) +
                     " ones after zero #" + std::to_string(zero_index) +
                     ": input is not cube-free"),
        zero_index(zero_index), run_length(run_length) {}

  std::size_t zero_index;
  std::size_t run_length;
};

/// Thue-Morse word T_iterations over {0,1}: T_0 = "0", then 0 -> 01, 1 -> 10.
/// T_i is a prefix of T_{i+1}; |T_i| = 2^i. Throws domain_error past iterations = 30.
Word thue_morse(int iterations);

/// Ternary derivative: output[i] counts the 1's strictly between the (i+1)-th
/// and (i+2)-th zero of w. Requires ≥ 2 zeros; a gap of three or more 1's means
/// w was not cube-free and raises cube_error.
Word derive_ternary(const Word& w);

}  // namespace thuelab::words
