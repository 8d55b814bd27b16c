#pragma once

#include <string>

#include "ucyc/patterns.hpp"

namespace ucyc {

// Compact rendering: contiguous digits when every letter is a single digit
// ("564132"), space-separated otherwise.
std::string word_text(const Word& w);

// Space-separated integers, one row of CLI output.
std::string row_text(const Word& w);

// Single-line matrix rendering with rows joined by '/': "231/312".
std::string matrix_text(const PermMatrix& m);

// Inverse of word_text: a line with whitespace is split into integers,
// otherwise each character is one digit letter. A lone multi-digit value
// therefore renders ambiguously; words of length one must stay single digit.
// Throws std::invalid_argument on empty or non-numeric input.
Word parse_word(const std::string& line);

}  // namespace ucyc
