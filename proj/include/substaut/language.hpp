#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "substaut/substitution.hpp"

namespace substaut {

// Per-length word sets of the shift generated by a primitive substitution.
// L_2 is computed first, as the closure of the rule-word interior pairs under
// "apply theta, collect interior and boundary pairs"; L_n for n >= 3 is read
// off from theta^m-images of L_2 words with r^m >= n+1.
//
// Each L_n is computed once and never mutated afterwards, so references
// returned by words() stay valid and reads are safe from any thread.
class LanguageCache {
 public:
  explicit LanguageCache(Substitution s, Caps caps = {});

  const Substitution& substitution() const { return sub_; }

  // L_n for n >= 1.
  const WordSet& words(int n) const;

  // Complexity p(n) = |L_n|.
  std::size_t complexity(int n) const { return words(n).size(); }

  bool contains(const Word& w) const;

 private:
  Substitution sub_;
  Caps caps_;
  mutable std::mutex mu_;
  mutable std::map<int, WordSet> cache_;
};

// One-shot convenience; prefer a LanguageCache when querying repeatedly.
WordSet language(const Substitution& s, int n, const Caps& caps = {});

}  // namespace substaut
