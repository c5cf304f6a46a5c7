#pragma once

#include <compare>
#include <string>
#include <vector>

#include "csp/errors.hpp"

namespace csp {

/// A length-n word over the alphabet {1..k}. Letter j stands for the
/// coordinate value omega^j with omega a primitive k-th root of unity.
struct Word {
  std::vector<int> letters;
  int alphabet = 0;

  Word() = default;
  Word(std::vector<int> ls, int k) : letters(std::move(ls)), alphabet(k) {
    for (int l : letters)
      if (l < 1 || l > alphabet)
        throw DomainError("Word: letter " + std::to_string(l) + " outside 1.." + std::to_string(alphabet));
  }

  int length() const { return static_cast<int>(letters.size()); }
  int operator[](std::size_t i) const { return letters[i]; }

  /// Multiplicity of each letter 1..k.
  std::vector<int> content() const {
    std::vector<int> c(alphabet, 0);
    for (int l : letters) ++c[l - 1];
    return c;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(letters[i]);
    }
    return s;
  }

  bool operator==(const Word& o) const { return letters == o.letters; }
  auto operator<=>(const Word& o) const { return letters <=> o.letters; }
};

}  // namespace csp
