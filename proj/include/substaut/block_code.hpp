#pragma once

#include <map>
#include <optional>

#include "substaut/language.hpp"
#include "substaut/radic.hpp"

namespace substaut {

// A sliding local rule: output at position i reads the window
// x_{i-left} ... x_{i+right}.  The table is total on the admissible windows
// of the declared source language.  kappa, when present, is the odometer
// translation the induced map realizes; it is additive under composition.
struct BlockCode {
  int left = 0;
  int right = 0;
  std::vector<std::string> source_alphabet;
  std::vector<std::string> target_alphabet;
  std::map<Word, Sym> table;
  std::optional<RAdicRational> kappa;

  int width() const { return left + right + 1; }

  // Value at a window position; `center` indexes the output coordinate
  // inside `w`, which must reach left/right far enough.
  Sym eval_at(const Word& w, int center) const;
};

BlockCode identity_code(const Substitution& s);

// sigma^n as a block code (projection to coordinate n); kappa = n.
BlockCode shift_power_code(const Substitution& s, int n,
                           const LanguageCache& lang);

// Slides the local rule over w; |result| = |w| - left - right.
// Throws std::domain_error on a window absent from the table.
Word code_apply(const BlockCode& c, const Word& w);

// outer after inner; all windows drawn from the source language of `inner`.
// kappa is the sum of fingerprints when both are present.
BlockCode code_compose(const BlockCode& outer, const BlockCode& inner,
                       const LanguageCache& source_lang, const Caps& caps = {});

// True iff the two codes induce the same map on the shift: radii are padded
// to a common width and the rules compared on every admissible window.
bool codes_equal(const BlockCode& a, const BlockCode& b,
                 const LanguageCache& source_lang, const Caps& caps = {});

// Smallest-radius code inducing the same map (ties broken toward smaller
// left radius); used to present witnesses at their true radius.
BlockCode reduce_radius(const BlockCode& c, const LanguageCache& source_lang,
                        const Caps& caps = {});

// Inverse block code found by radius search.  Returns std::nullopt when the
// code is provably not invertible; throws resource_limit_error when the
// radius cap is exhausted while the answer is still open.
std::optional<BlockCode> invert_code(const BlockCode& c,
                                     const LanguageCache& source_lang,
                                     const LanguageCache& target_lang,
                                     const Caps& caps = {});

}  // namespace substaut
