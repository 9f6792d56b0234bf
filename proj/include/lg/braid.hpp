#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "lg/errors.hpp"

namespace lg {

/// A braid word on n strands: letters are signed generator indices, +i for
/// strand i crossing over strand i+1 and -i for the inverse crossing.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
};

inline void validate(const BraidWord& w) {
  if (w.strands < 1)
    throw ParseError("strand count must be >= 1, got " +
                     std::to_string(w.strands));
  for (int letter : w.letters) {
    int i = std::abs(letter);
    if (i < 1 || i > w.strands - 1)
      throw ParseError("generator " + std::to_string(letter) +
                       " out of range for " + std::to_string(w.strands) +
                       " strands");
  }
}

/// Mirror image: every crossing swapped for its inverse.
inline BraidWord reflected(BraidWord w) {
  for (int& letter : w.letters) letter = -letter;
  return w;
}

/// Parses the braid word grammar:  n=<strands>; l1 l2 l3 ...
/// e.g. "n=3; 1 -2 1 -2".  The semicolon is optional, letters are
/// whitespace-separated signed integers.
inline BraidWord parse_braid(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) ||
            text[pos] == ';'))
      ++pos;
  };
  auto next_token = [&]() -> std::string {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != ';')
      ++pos;
    return std::string(text.substr(start, pos - start));
  };
  auto parse_int = [](const std::string& tok) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + tok + "'");
    }
    if (used != tok.size())
      throw ParseError("expected an integer, got '" + tok + "'");
    return value;
  };

  std::string head = next_token();
  if (head.rfind("n=", 0) != 0)
    throw ParseError("braid word must start with 'n=<strands>', got '" + head +
                     "'");
  BraidWord w;
  w.strands = parse_int(head.substr(2));
  skip_ws();
  while (pos < text.size()) {
    std::string tok = next_token();
    if (tok.empty()) break;
    int letter = parse_int(tok);
    if (letter == 0) throw ParseError("generator index 0 is not valid");
    w.letters.push_back(letter);
    skip_ws();
  }
  validate(w);
  return w;
}

/// Renders a braid word back into the grammar accepted by parse_braid.
inline std::string to_string(const BraidWord& w) {
  std::string out = "n=" + std::to_string(w.strands) + ";";
  for (int letter : w.letters) out += " " + std::to_string(letter);
  return out;
}

}  // namespace lg
