#pragma once

#include <optional>
#include <string>
#include <vector>

#include "substaut/caps.hpp"
#include "substaut/words.hpp"

namespace substaut {

// A constant-length substitution: every letter maps to a word of the same
// length r >= 2 over the same alphabet.  Symbol order is declaration order
// and every enumeration in the library derives from it.
class Substitution {
 public:
  Substitution(std::vector<std::string> alphabet, std::vector<Word> rules);

  int size() const { return static_cast<int>(alphabet_.size()); }
  int length() const { return r_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& name(Sym a) const { return alphabet_[a]; }
  const Word& rule(Sym a) const { return rules_[a]; }
  const std::vector<Word>& rules() const { return rules_; }

  // i-th column map: the letter at position i of rule(a), 0 <= i < r.
  Sym column(int i, Sym a) const { return rules_[a][i]; }

  // Image of a word under the substitution; length grows by a factor of r.
  Word apply(const Word& w, const Caps& caps = {}) const;

  // theta^m as a substitution of length r^m.
  Substitution power(int m, const Caps& caps = {}) const;

  bool injective() const;  // pairwise distinct rule words

  std::string to_string(const Word& w) const {
    return word_to_string(w, alphabet_);
  }

 private:
  std::vector<std::string> alphabet_;
  std::vector<Word> rules_;
  int r_;
};

// Parses the substitution text format:
//   optional line  "alphabet: s1 s2 ..."   (whitespace-separated tokens)
//   rule lines     "x -> w"                (w is a concatenation of
//                  single-character symbols, or whitespace-separated tokens
//                  when an alphabet: line was declared)
//   '#' starts a comment, blank lines are ignored.
// Throws std::invalid_argument with a line-numbered message on bad input.
Substitution parse_substitution(const std::string& text);

// theta^m(a).  Errors with resource_limit_error when r^m exceeds the word cap.
Word theta_power_word(const Substitution& s, Sym a, int m, const Caps& caps = {});

// True iff some power k <= (|A|-1)^2 + 1 of the incidence matrix is
// entrywise positive.
bool is_primitive(const Substitution& s);

// Result of the complexity plateau scan.  A plateau p(n+1) = p(n) certifies
// that the minimal shift is periodic, hence finite.  Exhausting the bound
// without a plateau is reported as infinite, with heuristic = true: the scan
// bound is pragmatic, not certified.
struct InfinitenessReport {
  bool infinite = false;
  int bound = 0;                  // scan bound B = |A|^2 * r
  std::optional<int> plateau_at;  // least n with p(n+1) = p(n), if found
  bool heuristic = false;         // true when infinite was concluded by scan exhaustion
};

InfinitenessReport infiniteness(const Substitution& s, const Caps& caps = {});

inline bool is_infinite(const Substitution& s, const Caps& caps = {}) {
  return infiniteness(s, caps).infinite;
}

}  // namespace substaut
