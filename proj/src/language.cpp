#include "substaut/language.hpp"

#include <stdexcept>

namespace substaut {

namespace {

// Closure of the rule-word interior pairs under one substitution step:
// theta(xy) contributes the interior pairs of theta(x), theta(y) and the
// boundary pair (last letter of theta(x), first letter of theta(y)).
WordSet two_word_closure(const Substitution& s) {
  WordSet l2;
  for (Sym a = 0; a < s.size(); ++a)
    collect_subwords(s.rule(a), 2, l2);

  bool grew = true;
  while (grew) {
    grew = false;
    WordSet add;
    for (const Word& w : l2) {
      Word boundary{s.column(s.length() - 1, w[0]), s.column(0, w[1])};
      if (!l2.count(boundary)) add.insert(boundary);
    }
    if (!add.empty()) {
      l2.insert(add.begin(), add.end());
      grew = true;
    }
  }
  return l2;
}

}  // namespace

LanguageCache::LanguageCache(Substitution s, Caps caps)
    : sub_(std::move(s)), caps_(caps) {}

const WordSet& LanguageCache::words(int n) const {
  if (n < 1) throw std::invalid_argument("word length must be >= 1");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;

  WordSet out;
  if (n == 1) {
    // Primitivity makes every letter occur.
    for (Sym a = 0; a < sub_.size(); ++a) out.insert(Word{a});
  } else {
    if (!cache_.count(2)) cache_.emplace(2, two_word_closure(sub_));
    if (n == 2) return cache_.at(2);
    const WordSet& l2 = cache_.at(2);
    int m = 0;
    std::int64_t rm = 1;
    while (rm < n + 1) {
      rm *= sub_.length();
      ++m;
      if (2 * rm > caps_.word_cap)
        throw resource_limit_error("language query exceeds word cap");
    }
    for (const Word& w : l2) {
      Word image = w;
      for (int i = 0; i < m; ++i) image = sub_.apply(image, caps_);
      collect_subwords(image, static_cast<std::size_t>(n), out);
    }
  }
  auto [pos, inserted] = cache_.emplace(n, std::move(out));
  (void)inserted;
  return pos->second;
}

bool LanguageCache::contains(const Word& w) const {
  return words(static_cast<int>(w.size())).count(w) > 0;
}

WordSet language(const Substitution& s, int n, const Caps& caps) {
  return LanguageCache(s, caps).words(n);
}

}  // namespace substaut
