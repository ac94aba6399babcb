#include "thuelab/words/word.hpp"

#include "thuelab/errors.hpp"

namespace thuelab::words {

Word::Word(std::vector<Symbol> symbols, Symbol alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 1) throw domain_error("alphabet size must be ≥ 1");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] < 0 || symbols_[i] >= alphabet_size_)
      throw domain_error("symbol " + std::to_string(symbols_[i]) + " at index " +
                         std::to_string(i) + " outside alphabet of size " +
                         std::to_string(alphabet_size_));
  }
}

Word Word::from_digits(std::string_view digits, Symbol alphabet_size) {
  if (alphabet_size > 10)
    throw domain_error("from_digits supports alphabets up to 10 symbols");
  std::vector<Symbol> syms;
  syms.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw domain_error(std::string("not a digit: '") + c + "'");
    syms.push_back(c - '0');
  }
  return Word(std::move(syms), alphabet_size);
}

void Word::push_back(Symbol s) {
  if (s < 0 || s >= alphabet_size_)
    throw domain_error("symbol " + std::to_string(s) + " outside alphabet of size " +
                       std::to_string(alphabet_size_));
  symbols_.push_back(s);
}

void Word::pop_back() {
  if (symbols_.empty()) throw domain_error("pop_back on empty word");
  symbols_.pop_back();
}

Word Word::prefix(std::size_t n) const {
  if (n > size()) throw domain_error("prefix length exceeds word length");
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + n), alphabet_size_);
}

std::string Word::to_text() const {
  std::string out;
  if (alphabet_size_ <= 10) {
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
  } else {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(symbols_[i]);
    }
  }
  return out;
}

}  // namespace thuelab::words
