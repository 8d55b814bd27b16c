#include "ucyc/text.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ucyc {

std::string word_text(const Word& w) {
  const bool digits = std::all_of(w.begin(), w.end(),
                                  [](Value v) { return v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i > 0) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string row_text(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string matrix_text(const PermMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    if (r > 0) out += '/';
    out += word_text(m.rows[r]);
  }
  return out;
}

Word parse_word(const std::string& line) {
  Word w;
  if (line.find_first_of(" \t") != std::string::npos) {
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
      std::size_t pos = 0;
      unsigned long v = std::stoul(tok, &pos);
      if (pos != tok.size() || v > 0xffffffffUL)
        throw std::invalid_argument("parse_word: bad token '" + tok + "'");
      w.push_back(static_cast<Value>(v));
    }
  } else {
    for (char c : line) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("parse_word: bad character in word");
      w.push_back(static_cast<Value>(c - '0'));
    }
  }
  if (w.empty()) throw std::invalid_argument("parse_word: empty input");
  return w;
}

}  // namespace ucyc
