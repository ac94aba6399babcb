#include "thuelab/words/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "thuelab/errors.hpp"

namespace thuelab::words {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Word read_word(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  Symbol alphabet = -1;

  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    if (line.rfind("alphabet=", 0) != 0)
      throw parse_error("expected header 'alphabet=<c>'", lineno);
    try {
      alphabet = std::stoi(line.substr(9));
    } catch (const std::exception&) {
      throw parse_error("bad alphabet size '" + line.substr(9) + "'", lineno);
    }
    if (alphabet < 1) throw parse_error("alphabet size must be ≥ 1", lineno);
    break;
  }
  if (alphabet < 0) throw parse_error("missing 'alphabet=<c>' header", lineno ? lineno : 1);

  // Body: first non-comment line after the header; EOF means the empty word.
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    try {
      if (alphabet <= 10) return Word::from_digits(line, alphabet);
      std::vector<Symbol> syms;
      std::stringstream ss(line);
      std::string tok;
      while (std::getline(ss, tok, ',')) syms.push_back(std::stoi(tok));
      return Word(std::move(syms), alphabet);
    } catch (const std::exception& e) {
      throw parse_error(std::string("bad word body: ") + e.what(), lineno);
    }
  }
  return Word({}, alphabet);
}

Word read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "' for reading");
  return read_word(in);
}

std::string format_word(const Word& w) {
  return "alphabet=" + std::to_string(w.alphabet_size()) + "\n" + w.to_text() + "\n";
}

void write_word_file(const std::string& path, const Word& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  out << format_word(w);
  if (!out) throw io_error("write failed for '" + path + "'");
}

}  // namespace thuelab::words
