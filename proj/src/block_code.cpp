#include "substaut/block_code.hpp"

#include <stdexcept>

namespace substaut {

namespace {

const Sym* lookup(const BlockCode& c, const Word& w) {
  auto it = c.table.find(w);
  return it == c.table.end() ? nullptr : &it->second;
}

}  // namespace

Sym BlockCode::eval_at(const Word& w, int center) const {
  if (center < left || center + right >= static_cast<int>(w.size()))
    throw std::domain_error("window does not cover the code radius");
  Word win(w.begin() + (center - left), w.begin() + (center + right + 1));
  auto it = table.find(win);
  if (it == table.end())
    throw std::domain_error("inadmissible window for block code");
  return it->second;
}

BlockCode identity_code(const Substitution& s) {
  BlockCode c;
  c.source_alphabet = c.target_alphabet = s.alphabet();
  for (Sym a = 0; a < s.size(); ++a) c.table[{a}] = a;
  c.kappa = RAdicRational::integer(0, s.length());
  return c;
}

BlockCode shift_power_code(const Substitution& s, int n,
                           const LanguageCache& lang) {
  BlockCode c;
  c.source_alphabet = c.target_alphabet = s.alphabet();
  c.left = n < 0 ? -n : 0;
  c.right = n > 0 ? n : 0;
  for (const Word& w : lang.words(c.width()))
    c.table[w] = n >= 0 ? w.back() : w.front();
  c.kappa = RAdicRational::integer(n, s.length());
  return c;
}

Word code_apply(const BlockCode& c, const Word& w) {
  int n = static_cast<int>(w.size()) - c.left - c.right;
  if (n < 1) throw std::domain_error("word shorter than the code window");
  Word out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Word win(w.begin() + i, w.begin() + i + c.width());
    const Sym* v = lookup(c, win);
    if (!v) throw std::domain_error("inadmissible window for block code");
    out.push_back(*v);
  }
  return out;
}

BlockCode code_compose(const BlockCode& outer, const BlockCode& inner,
                       const LanguageCache& source_lang, const Caps& caps) {
  if (inner.target_alphabet != outer.source_alphabet)
    throw std::invalid_argument("alphabet mismatch in code composition");
  BlockCode c;
  c.left = outer.left + inner.left;
  c.right = outer.right + inner.right;
  c.source_alphabet = inner.source_alphabet;
  c.target_alphabet = outer.target_alphabet;
  for (const Word& w : source_lang.words(c.width())) {
    Word mid = code_apply(inner, w);
    const Sym* v = lookup(outer, mid);
    if (!v) throw std::domain_error("composition left the admissible language");
    c.table[w] = *v;
  }
  if (outer.kappa && inner.kappa) c.kappa = *outer.kappa + *inner.kappa;
  return c;
}

bool codes_equal(const BlockCode& a, const BlockCode& b,
                 const LanguageCache& source_lang, const Caps& caps) {
  if (a.source_alphabet != b.source_alphabet ||
      a.target_alphabet != b.target_alphabet)
    return false;
  int left = std::max(a.left, b.left);
  int right = std::max(a.right, b.right);
  for (const Word& w : source_lang.words(left + right + 1))
    if (a.eval_at(w, left) != b.eval_at(w, left)) return false;
  return true;
}

BlockCode reduce_radius(const BlockCode& c, const LanguageCache& source_lang,
                        const Caps& caps) {
  const WordSet& windows = source_lang.words(c.width());
  for (int total = 0; total < c.left + c.right; ++total) {
    for (int l = 0; l <= total; ++l) {
      int r = total - l;
      if (l > c.left || r > c.right) continue;
      std::map<Word, Sym> small;
      bool ok = true;
      for (const Word& w : windows) {
        Word sub(w.begin() + (c.left - l), w.begin() + (c.left + r + 1));
        Sym v = c.table.at(w);
        auto [it, inserted] = small.emplace(sub, v);
        if (!inserted && it->second != v) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      BlockCode out;
      out.left = l;
      out.right = r;
      out.source_alphabet = c.source_alphabet;
      out.target_alphabet = c.target_alphabet;
      out.kappa = c.kappa;
      // Keys must cover the full admissible language at the smaller width,
      // not just the sub-windows seen above.
      for (const Word& w : source_lang.words(l + r + 1)) {
        auto it = small.find(w);
        if (it == small.end()) {
          ok = false;
          break;
        }
        out.table[w] = it->second;
      }
      if (ok) return out;
    }
  }
  return c;
}

std::optional<BlockCode> invert_code(const BlockCode& c,
                                     const LanguageCache& source_lang,
                                     const LanguageCache& target_lang,
                                     const Caps& caps) {
  for (int radius = 0; radius <= caps.radius_cap; ++radius) {
    int src_width = 2 * radius + 1 + c.left + c.right;
    std::map<Word, std::set<Sym>> candidates;
    for (const Word& v : source_lang.words(src_width)) {
      Word image = code_apply(c, v);
      candidates[image].insert(v[radius + c.left]);
    }
    bool unique = true;
    bool missing = false;
    BlockCode inv;
    inv.left = inv.right = radius;
    inv.source_alphabet = c.target_alphabet;
    inv.target_alphabet = c.source_alphabet;
    for (const Word& w : target_lang.words(2 * radius + 1)) {
      auto it = candidates.find(w);
      if (it == candidates.end()) {
        missing = true;
        break;
      }
      if (it->second.size() != 1) {
        unique = false;
        break;
      }
      inv.table[w] = *it->second.begin();
    }
    // A target window with no preimage word means the code is not onto the
    // target shift, so no inverse exists at any radius.
    if (missing) return std::nullopt;
    if (!unique) continue;
    if (c.kappa) inv.kappa = -*c.kappa;

    BlockCode id_src = code_compose(inv, c, source_lang, caps);
    BlockCode id_tgt = code_compose(c, inv, target_lang, caps);
    if (!codes_equal(id_src, identity_code(source_lang.substitution()),
                     source_lang, caps) ||
        !codes_equal(id_tgt, identity_code(target_lang.substitution()),
                     target_lang, caps))
      return std::nullopt;
    return inv;
  }
  throw resource_limit_error("inverse-code radius search exceeded the cap");
}

}  // namespace substaut
