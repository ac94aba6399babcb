#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace thuelab::words {

using Symbol = std::int32_t;

/// Finite word over the alphabet {0, .., alphabet_size-1}.
class Word {
public:
  Word() = default;

  /// Throws domain_error if any symbol is outside the alphabet.
  Word(std::vector<Symbol> symbols, Symbol alphabet_size);

  /// Parses a digit string such as "0110"; requires alphabet_size ≤ 10.
  static Word from_digits(std::string_view digits, Symbol alphabet_size);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol alphabet_size() const { return alphabet_size_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  /// Bounds-checked append.
  void push_back(Symbol s);

  /// Removes the last symbol; throws domain_error when empty.
  void pop_back();

  Word prefix(std::size_t n) const;

  /// Body text: contiguous digits for alphabets ≤ 10, comma-separated otherwise.
  std::string to_text() const;

  bool operator==(const Word&) const = default;

private:
  std::vector<Symbol> symbols_;
  Symbol alphabet_size_ = 1;
};

}  // namespace thuelab::words
