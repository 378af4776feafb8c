#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lrfill::morph {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

class MorphismError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Letter-to-letter map between finite alphabets.
class Coding {
 public:
  Coding() = default;
  Coding(std::initializer_list<std::pair<Symbol, Symbol>> pairs) {
    for (const auto& [from, to] : pairs) set(from, to);
  }

  void set(Symbol from, Symbol to) {
    if (from >= table_.size()) table_.resize(from + 1, kNone);
    table_[from] = to;
  }
  [[nodiscard]] bool contains(Symbol from) const noexcept { return from < table_.size() && table_[from] != kNone; }
  [[nodiscard]] Symbol operator()(Symbol from) const {
    if (!contains(from)) throw MorphismError("coding has no image for symbol " + std::to_string(from));
    return table_[from];
  }
  [[nodiscard]] Word operator()(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back((*this)(s));
    return out;
  }
  [[nodiscard]] std::vector<Symbol> domain() const {
    std::vector<Symbol> out;
    for (Symbol s = 0; s < table_.size(); ++s)
      if (table_[s] != kNone) out.push_back(s);
    return out;
  }
  friend bool operator==(const Coding&, const Coding&) = default;

  static Coding identity(const std::vector<Symbol>& alphabet) {
    Coding c;
    for (Symbol s : alphabet) c.set(s, s);
    return c;
  }

 private:
  static constexpr Symbol kNone = 0xFFFFFFFFu;
  std::vector<Symbol> table_;
};

/// Display names for symbols; a symbol without an alias prints as its number.
class SymbolNames {
 public:
  void set(Symbol s, std::string name) { names_[s] = std::move(name); }
  [[nodiscard]] std::string operator()(Symbol s) const {
    const auto it = names_.find(s);
    return it == names_.end() ? std::to_string(s) : it->second;
  }
  [[nodiscard]] bool has_alias(Symbol s) const { return names_.contains(s); }
  [[nodiscard]] bool all_single_char(const std::vector<Symbol>& symbols) const {
    return std::ranges::all_of(symbols, [&](Symbol s) { return (*this)(s).size() == 1; });
  }
  friend bool operator==(const SymbolNames&, const SymbolNames&) = default;

 private:
  std::map<Symbol, std::string> names_;
};

/// Non-erasing substitution on a finite ordered alphabet. Immutable after
/// construction.
class Morphism {
 public:
  Morphism() = default;

  /// Rules are kept in the given order, which becomes the alphabet order.
  Morphism(std::vector<std::pair<Symbol, Word>> rules, SymbolNames names = {}) : names_(std::move(names)) {
    for (auto& [s, img] : rules) {
      if (contains(s)) throw MorphismError("symbol " + names_(s) + " has two images");
      if (img.empty()) throw MorphismError("image of " + names_(s) + " is empty");
      alphabet_.push_back(s);
      if (s >= images_.size()) images_.resize(s + 1);
      images_[s] = std::move(img);
    }
    for (Symbol s : alphabet_)
      for (Symbol t : images_[s])
        if (!contains(t))
          throw MorphismError("image of " + names_(s) + " uses " + names_(t) + ", which is outside the alphabet");
  }

  Morphism(std::initializer_list<std::pair<Symbol, Word>> rules, SymbolNames names = {})
      : Morphism(std::vector<std::pair<Symbol, Word>>(rules), std::move(names)) {}

  [[nodiscard]] const std::vector<Symbol>& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] const SymbolNames& names() const noexcept { return names_; }
  [[nodiscard]] bool contains(Symbol s) const noexcept { return s < images_.size() && !images_[s].empty(); }

  [[nodiscard]] const Word& image(Symbol s) const {
    if (!contains(s)) throw MorphismError("unknown symbol " + names_(s));
    return images_[s];
  }

  [[nodiscard]] std::size_t max_image_length() const {
    std::size_t out = 0;
    for (Symbol s : alphabet_) out = std::max(out, images_[s].size());
    return out;
  }

  /// Common image length when the morphism is uniform.
  [[nodiscard]] std::optional<std::size_t> uniform_length() const {
    if (alphabet_.empty()) return std::nullopt;
    const std::size_t len = images_[alphabet_.front()].size();
    for (Symbol s : alphabet_)
      if (images_[s].size() != len) return std::nullopt;
    return len;
  }

  [[nodiscard]] std::size_t order_of(Symbol s) const {
    const auto it = std::ranges::find(alphabet_, s);
    if (it == alphabet_.end()) throw MorphismError("unknown symbol " + names_(s));
    return static_cast<std::size_t>(it - alphabet_.begin());
  }

  [[nodiscard]] std::string format_word(const Word& w) const {
    std::string out;
    const bool compact = names_.all_single_char(w);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!compact && i) out += ' ';
      out += names_(w[i]);
    }
    return out;
  }

  /// ASCII literal, e.g. "1->114, 3->314, 4->314".
  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      if (i) out += ", ";
      out += names_(alphabet_[i]) + "->" + format_word(images_[alphabet_[i]]);
    }
    return out;
  }

  /// Same alphabet (as a set) and same images; names and order are ignored.
  friend bool operator==(const Morphism& a, const Morphism& b) {
    if (a.alphabet_.size() != b.alphabet_.size()) return false;
    return std::ranges::all_of(a.alphabet_, [&](Symbol s) { return b.contains(s) && a.images_[s] == b.images_[s]; });
  }

 private:
  std::vector<Symbol> alphabet_;
  std::vector<Word> images_;
  SymbolNames names_;
};

inline Word apply(const Morphism& m, const Word& w) {
  Word out;
  for (Symbol s : w) {
    const Word& img = m.image(s);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

inline Word iterate(const Morphism& m, Word w, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) w = morph::apply(m, w);
  return w;
}

/// Bijective renaming of a morphism's symbols.
inline Morphism rename(const Morphism& m, const Coding& c, SymbolNames names = {}) {
  std::vector<std::pair<Symbol, Word>> rules;
  std::vector<Symbol> seen;
  for (Symbol s : m.alphabet()) {
    const Symbol t = c(s);
    if (std::ranges::find(seen, t) != seen.end()) throw MorphismError("rename is not injective");
    seen.push_back(t);
    rules.emplace_back(t, c(m.image(s)));
  }
  return Morphism(std::move(rules), std::move(names));
}

/// Builds a word from a string of single-character digit symbols, e.g. "114".
inline Word word(std::string_view digits) {
  Word out;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw MorphismError(std::string("not a digit symbol: ") + ch);
    out.push_back(static_cast<Symbol>(ch - '0'));
  }
  return out;
}

/// Parsed form of "name: 1->114, 3->314, 4->314 ; seed=1".
struct MorphismLiteral {
  std::string name;
  Morphism morphism;
  std::optional<Symbol> seed;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline bool is_token(const std::string& t) {
  return !t.empty() && std::ranges::all_of(t, [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '_';
  });
}

class TokenTable {
 public:
  Symbol intern(const std::string& token, SymbolNames& names) {
    if (!is_token(token)) throw MorphismError("bad symbol token '" + token + "'");
    if (const auto it = ids_.find(token); it != ids_.end()) return it->second;
    Symbol id;
    if (std::ranges::all_of(token, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
        token.size() <= 6) {
      id = static_cast<Symbol>(std::stoul(token));
    } else {
      id = next_named_++;
      names.set(id, token);
    }
    ids_.emplace(token, id);
    return id;
  }

 private:
  std::map<std::string, Symbol> ids_;
  Symbol next_named_ = 1u << 20;
};

}  // namespace detail

/// Parses the ASCII morphism literal. A right-hand side without spaces is a
/// string of single-character symbols; with spaces it is a token list, which
/// allows multi-character symbols such as "2b".
inline MorphismLiteral parse_morphism(std::string_view text) {
  MorphismLiteral lit;
  std::string body(text);
  if (const auto semi = body.find(';'); semi != std::string::npos) {
    const std::string tail = detail::trim(std::string_view(body).substr(semi + 1));
    body.resize(semi);
    if (!tail.empty()) {
      if (tail.rfind("seed", 0) != 0) throw MorphismError("expected 'seed=<symbol>' after ';'");
      const auto eq = tail.find('=');
      if (eq == std::string::npos) throw MorphismError("expected 'seed=<symbol>' after ';'");
      lit.seed = 0;  // resolved below once the table exists
    }
  }
  if (const auto colon = body.find(':'); colon != std::string::npos) {
    lit.name = detail::trim(std::string_view(body).substr(0, colon));
    body = body.substr(colon + 1);
  }

  detail::TokenTable table;
  SymbolNames names;
  std::vector<std::pair<Symbol, Word>> rules;
  std::stringstream rules_in(body);
  std::string rule_text;
  while (std::getline(rules_in, rule_text, ',')) {
    const std::string r = detail::trim(rule_text);
    if (r.empty()) continue;
    const auto arrow = r.find("->");
    if (arrow == std::string::npos) throw MorphismError("rule '" + r + "' has no '->'");
    const std::string lhs = detail::trim(std::string_view(r).substr(0, arrow));
    const std::string rhs = detail::trim(std::string_view(r).substr(arrow + 2));
    if (rhs.empty()) throw MorphismError("rule '" + r + "' has an empty image");
    const Symbol from = table.intern(lhs, names);
    Word img;
    if (rhs.find_first_of(" \t") == std::string::npos) {
      for (char ch : rhs) img.push_back(table.intern(std::string(1, ch), names));
    } else {
      std::stringstream toks(rhs);
      std::string tok;
      while (toks >> tok) img.push_back(table.intern(tok, names));
    }
    rules.emplace_back(from, std::move(img));
  }
  if (rules.empty()) throw MorphismError("morphism literal has no rules");
  lit.morphism = Morphism(std::move(rules), names);

  if (lit.seed) {
    const std::string tail = detail::trim(std::string_view(text).substr(text.find(';') + 1));
    const std::string seed_tok = detail::trim(std::string_view(tail).substr(tail.find('=') + 1));
    lit.seed = table.intern(seed_tok, names);
    if (!lit.morphism.contains(*lit.seed)) throw MorphismError("seed '" + seed_tok + "' is not in the alphabet");
  }
  return lit;
}

}  // namespace lrfill::morph
