#include "substaut/substitution.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "substaut/language.hpp"

namespace substaut {

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  bool single = true;
  for (const auto& n : names)
    if (n.size() != 1) single = false;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += ' ';
    out += names[w[i]];
  }
  return out;
}

Substitution::Substitution(std::vector<std::string> alphabet,
                           std::vector<Word> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  if (alphabet_.empty()) throw std::invalid_argument("empty alphabet");
  if (rules_.size() != alphabet_.size())
    throw std::invalid_argument("rule count does not match alphabet size");
  r_ = static_cast<int>(rules_[0].size());
  if (r_ < 2) throw std::invalid_argument("rule words must have length >= 2");
  for (std::size_t a = 0; a < rules_.size(); ++a) {
    if (static_cast<int>(rules_[a].size()) != r_)
      throw std::invalid_argument("rule for '" + alphabet_[a] +
                                  "' has a different length");
    for (Sym x : rules_[a])
      if (x < 0 || x >= size())
        throw std::invalid_argument("rule for '" + alphabet_[a] +
                                    "' uses an out-of-range symbol");
  }
}

Word Substitution::apply(const Word& w, const Caps& caps) const {
  if (static_cast<std::int64_t>(w.size()) * r_ > caps.word_cap)
    throw resource_limit_error("substitution image exceeds word cap");
  Word out;
  out.reserve(w.size() * r_);
  for (Sym a : w) out.insert(out.end(), rules_[a].begin(), rules_[a].end());
  return out;
}

Substitution Substitution::power(int m, const Caps& caps) const {
  if (m < 1) throw std::invalid_argument("power must be >= 1");
  std::vector<Word> rules;
  rules.reserve(alphabet_.size());
  for (Sym a = 0; a < size(); ++a)
    rules.push_back(theta_power_word(*this, a, m, caps));
  return Substitution(alphabet_, std::move(rules));
}

bool Substitution::injective() const {
  std::set<Word> seen(rules_.begin(), rules_.end());
  return seen.size() == rules_.size();
}

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Substitution parse_substitution(const std::string& text) {
  std::vector<std::string> names;
  std::map<std::string, Sym> index;
  bool alphabet_declared = false;

  struct RawRule {
    int line;
    std::string lhs;
    std::string rhs;
  };
  std::vector<RawRule> raw;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;

    if (line.rfind("alphabet:", 0) == 0) {
      if (alphabet_declared) fail(lineno, "duplicate alphabet line");
      if (!raw.empty()) fail(lineno, "alphabet line must precede rules");
      alphabet_declared = true;
      for (const auto& tok : split_ws(line.substr(9))) {
        if (index.count(tok)) fail(lineno, "duplicate symbol '" + tok + "'");
        index[tok] = static_cast<Sym>(names.size());
        names.push_back(tok);
      }
      if (names.empty()) fail(lineno, "empty alphabet");
      continue;
    }

    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      fail(lineno, "expected 'x -> w' or 'alphabet: ...'");
    std::string lhs = strip(line.substr(0, arrow));
    std::string rhs = strip(line.substr(arrow + 2));
    if (lhs.empty()) fail(lineno, "missing left-hand symbol");
    if (rhs.empty()) fail(lineno, "missing image word");
    raw.push_back({lineno, lhs, rhs});
  }

  if (raw.empty()) throw std::invalid_argument("no rules found");

  if (!alphabet_declared) {
    // Declaration order of the rule lines fixes the symbol order.
    for (const auto& rr : raw) {
      if (rr.lhs.size() != 1)
        fail(rr.line, "multi-character symbol '" + rr.lhs +
                          "' requires an alphabet: line");
      if (index.count(rr.lhs))
        fail(rr.line, "duplicate rule for '" + rr.lhs + "'");
      index[rr.lhs] = static_cast<Sym>(names.size());
      names.push_back(rr.lhs);
    }
  }

  std::vector<Word> rules(names.size());
  std::vector<bool> have(names.size(), false);
  for (const auto& rr : raw) {
    auto it = index.find(rr.lhs);
    if (it == index.end()) fail(rr.line, "unknown symbol '" + rr.lhs + "'");
    Sym a = it->second;
    if (have[a]) fail(rr.line, "duplicate rule for '" + rr.lhs + "'");
    have[a] = true;

    Word w;
    if (alphabet_declared) {
      bool single = true;
      for (const auto& n : names)
        if (n.size() != 1) single = false;
      std::vector<std::string> toks = split_ws(rr.rhs);
      if (toks.size() == 1 && single) {
        // Allow concatenated single-character images with a declared alphabet.
        for (char c : toks[0]) {
          auto jt = index.find(std::string(1, c));
          if (jt == index.end())
            fail(rr.line, std::string("unknown symbol '") + c + "' in image");
          w.push_back(jt->second);
        }
      } else {
        for (const auto& tok : toks) {
          auto jt = index.find(tok);
          if (jt == index.end())
            fail(rr.line, "unknown symbol '" + tok + "' in image");
          w.push_back(jt->second);
        }
      }
    } else {
      for (char c : rr.rhs) {
        if (c == ' ' || c == '\t') continue;
        auto jt = index.find(std::string(1, c));
        if (jt == index.end())
          fail(rr.line, std::string("unknown symbol '") + c + "' in image");
        w.push_back(jt->second);
      }
    }
    rules[a] = std::move(w);
  }

  for (std::size_t a = 0; a < names.size(); ++a)
    if (!have[a])
      throw std::invalid_argument("no rule for symbol '" + names[a] + "'");

  std::size_t r = rules[0].size();
  for (std::size_t a = 0; a < rules.size(); ++a)
    if (rules[a].size() != r)
      throw std::invalid_argument("rule for '" + names[a] +
                                  "' has length " + std::to_string(rules[a].size()) +
                                  ", expected " + std::to_string(r));

  return Substitution(std::move(names), std::move(rules));
}

Word theta_power_word(const Substitution& s, Sym a, int m, const Caps& caps) {
  if (m < 0) throw std::invalid_argument("negative power");
  Word w{a};
  for (int i = 0; i < m; ++i) w = s.apply(w, caps);
  return w;
}

bool is_primitive(const Substitution& s) {
  int n = s.size();
  // Boolean incidence matrix: reach[a][b] iff b occurs in theta(a).
  std::vector<std::vector<bool>> cur(n, std::vector<bool>(n, false));
  for (Sym a = 0; a < n; ++a)
    for (Sym b : s.rule(a)) cur[a][b] = true;

  auto all_positive = [&](const std::vector<std::vector<bool>>& m) {
    for (const auto& row : m)
      for (bool v : row)
        if (!v) return false;
    return true;
  };

  int bound = (n - 1) * (n - 1) + 1;
  auto base = cur;
  for (int k = 1; k <= bound; ++k) {
    if (all_positive(cur)) return true;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (cur[i][j])
          for (int l = 0; l < n; ++l)
            if (base[j][l]) next[i][l] = true;
    cur = std::move(next);
  }
  return false;
}

InfinitenessReport infiniteness(const Substitution& s, const Caps& caps) {
  InfinitenessReport rep;
  rep.bound = s.size() * s.size() * s.length();
  LanguageCache lang(s, caps);
  std::size_t prev = lang.complexity(1);
  for (int n = 1; n <= rep.bound; ++n) {
    std::size_t next = lang.complexity(n + 1);
    if (next == prev) {
      rep.plateau_at = n;
      rep.infinite = false;
      return rep;
    }
    prev = next;
  }
  rep.infinite = true;
  rep.heuristic = true;
  return rep;
}

}  // namespace substaut
