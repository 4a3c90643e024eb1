#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace substaut {

// Symbols are indices into a Substitution's alphabet (declaration order).
// Digit words over {0,...,r-1} reuse the same representation.
using Sym = int;
using Word = std::vector<Sym>;
using WordSet = std::set<Word>;

inline Word subword(const Word& w, std::size_t pos, std::size_t len) {
  return Word(w.begin() + pos, w.begin() + pos + len);
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// All factors of length n, left to right.
inline void collect_subwords(const Word& w, std::size_t n, WordSet& into) {
  if (w.size() < n) return;
  for (std::size_t i = 0; i + n <= w.size(); ++i)
    into.insert(subword(w, i, n));
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

}  // namespace substaut
