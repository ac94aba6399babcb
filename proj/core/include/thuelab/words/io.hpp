#pragma once

#include <iosfwd>
#include <string>

#include "thuelab/words/word.hpp"

namespace thuelab::words {

// Word file format: one header line "alphabet=<c>", then the body on one line
// (digit string for c ≤ 10, comma-separated decimal symbols otherwise).
// Blank lines and lines starting with '#' are ignored.

Word read_word(std::istream& in);
Word read_word_file(const std::string& path);

std::string format_word(const Word& w);
void write_word_file(const std::string& path, const Word& w);

}  // namespace thuelab::words
