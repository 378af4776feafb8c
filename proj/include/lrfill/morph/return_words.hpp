#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrfill/morph/morphism.hpp"
#include "lrfill/morph/sequence.hpp"

namespace lrfill::morph {

/// Return words of a marker inside a sequence prefix.
struct ReturnWordTable {
  Word marker;
  std::vector<Word> words;               // first-occurrence order; code i is words[i-1]
  std::vector<Symbol> coded;             // code of the return word starting at occurrences[i]
  std::vector<std::size_t> occurrences;  // 1-indexed starts of the marker (the last one opens no word)
  std::size_t horizon = 0;
  bool complete = false;  // no new word in the second half of the horizon
  SymbolSequence source = SymbolSequence::from_word({});

  [[nodiscard]] std::vector<std::size_t> lengths() const {
    std::vector<std::size_t> out;
    for (const auto& w : words) out.push_back(w.size());
    return out;
  }

  [[nodiscard]] std::optional<Symbol> code_of(const Word& w) const {
    const auto it = std::ranges::find(words, w);
    if (it == words.end()) return std::nullopt;
    return static_cast<Symbol>(it - words.begin() + 1);
  }

  /// Concatenation of the coded return words: the source from its first marker
  /// occurrence up to (not including) the last one.
  [[nodiscard]] Word reconstruct() const {
    Word out;
    for (Symbol c : coded) out.insert(out.end(), words[c - 1].begin(), words[c - 1].end());
    return out;
  }
};

inline std::vector<std::size_t> occurrences_of(const Word& haystack, const Word& marker) {
  std::vector<std::size_t> out;
  if (marker.empty() || haystack.size() < marker.size()) return out;
  for (std::size_t i = 0; i + marker.size() <= haystack.size(); ++i)
    if (std::equal(marker.begin(), marker.end(), haystack.begin() + static_cast<std::ptrdiff_t>(i))) out.push_back(i + 1);
  return out;
}

inline ReturnWordTable return_words(const SymbolSequence& seq, const Word& marker, std::size_t horizon) {
  if (marker.empty()) throw MorphismError("empty marker");
  if (const auto len = seq.length()) horizon = std::min(horizon, *len);
  const Word prefix = seq.take(horizon);

  ReturnWordTable t;
  t.marker = marker;
  t.horizon = horizon;
  t.source = seq;
  t.occurrences = occurrences_of(prefix, marker);
  if (t.occurrences.size() < 2) throw MorphismError("insufficient occurrences of the marker within the horizon");

  std::size_t last_new_at = 0;
  for (std::size_t i = 0; i + 1 < t.occurrences.size(); ++i) {
    Word w(prefix.begin() + static_cast<std::ptrdiff_t>(t.occurrences[i] - 1),
           prefix.begin() + static_cast<std::ptrdiff_t>(t.occurrences[i + 1] - 1));
    auto code = t.code_of(w);
    if (!code) {
      t.words.push_back(std::move(w));
      code = static_cast<Symbol>(t.words.size());
      last_new_at = t.occurrences[i];
    }
    t.coded.push_back(*code);
  }
  t.complete = last_new_at <= horizon / 2;
  return t;
}

struct DerivedOptions {
  /// Shift applied to every image interval. +c strips a leading conjugating
  /// word of length c (and appends it), -c prepends a trailing one.
  std::ptrdiff_t alignment = 0;
  /// Recode the first return-word occurrence as a dedicated startup letter
  /// whose image also covers whatever the image of the prefix before it adds.
  bool startup = false;
};

struct DerivedMorphism {
  Morphism morphism;                  // on codes 1..words.size(), startup = words.size()+1
  std::map<Symbol, std::size_t> lengths;  // code -> length of the return word it stands for
  std::optional<Symbol> startup;
  Symbol seed = 0;                 // code of the first occurrence
  std::size_t image_offset = 0;    // coded[image_offset..] is the image of coded
  std::size_t verified_occurrences = 0;
};

/// Derived morphism of `m` on the return words in `table`, whose source must
/// be the fixed point of `m`. The image of the occurrence starting at p_i is
/// read off the sequence itself: it is the list of occurrences starting in
/// [A(p_i)+alignment, A(p_{i+1})+alignment), where A(j) is the start of the
/// image of entry j. Every occurrence of a code must agree.
inline DerivedMorphism derived_morphism(const Morphism& m, const ReturnWordTable& table, DerivedOptions opt = {}) {
  const std::size_t h = table.horizon;
  const Word u = table.source.take(h);
  const Word mu = morph::apply(m, Word(u.begin(), u.begin() + std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(h), 64)));
  for (std::size_t i = 0; i < std::min(mu.size(), h); ++i)
    if (mu[i] != u[i]) throw MorphismError("table source is not a fixed point of the given morphism");

  // A[j] = 1-indexed start of the image of u_j; A has h+1 entries after index 0.
  std::vector<std::ptrdiff_t> image_start(h + 2, 0);
  image_start[1] = 1;
  for (std::size_t j = 1; j <= h; ++j)
    image_start[j + 1] = image_start[j] + static_cast<std::ptrdiff_t>(m.image(u[j - 1]).size());

  const auto& occ = table.occurrences;
  const std::size_t coded_count = table.coded.size();
  const Symbol startup_code = static_cast<Symbol>(table.words.size() + 1);
  auto code_at = [&](std::size_t i) { return (opt.startup && i == 0) ? startup_code : table.coded[i]; };

  DerivedMorphism out;
  out.seed = code_at(0);
  if (opt.startup) out.startup = startup_code;

  std::map<Symbol, Word> images;
  std::map<Symbol, std::size_t> first_seen;
  std::size_t cursor = 0;  // first occurrence index with start >= lo
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    const std::ptrdiff_t lo = (opt.startup && i == 0) ? 1 : image_start[occ[i]] + opt.alignment;
    const std::ptrdiff_t hi = image_start[occ[i + 1]] + opt.alignment;
    if (hi > static_cast<std::ptrdiff_t>(occ[coded_count - 1])) break;  // image runs past the coded range
    while (cursor < occ.size() && static_cast<std::ptrdiff_t>(occ[cursor]) < lo) ++cursor;
    if (i == 0) out.image_offset = cursor;
    if (!(opt.startup && i == 0) && (cursor >= occ.size() || static_cast<std::ptrdiff_t>(occ[cursor]) != lo))
      throw MorphismError("image of occurrence at " + std::to_string(occ[i]) +
                          " does not start at a marker occurrence (try another alignment)");
    Word img;
    std::size_t j = cursor;
    while (j < occ.size() && static_cast<std::ptrdiff_t>(occ[j]) < hi) img.push_back(code_at(j++));
    if (j >= occ.size() || static_cast<std::ptrdiff_t>(occ[j]) != hi)
      throw MorphismError("image of occurrence at " + std::to_string(occ[i]) +
                          " does not end at a marker occurrence");
    if (img.empty()) throw MorphismError("empty image for occurrence at " + std::to_string(occ[i]));

    const Symbol c = code_at(i);
    if (const auto it = images.find(c); it == images.end()) {
      images.emplace(c, std::move(img));
      first_seen.emplace(c, occ[i]);
    } else if (it->second != img) {
      throw MorphismError("return word " + std::to_string(c) + " has two different images (occurrences at " +
                          std::to_string(first_seen[c]) + " and " + std::to_string(occ[i]) + ")");
    }
    ++out.verified_occurrences;
  }

  SymbolNames names;
  std::vector<std::pair<Symbol, Word>> rules;
  for (auto& [c, img] : images) {
    for (Symbol x : img)
      if (!images.contains(x))
        throw MorphismError("code " + std::to_string(x) + " has no image within the horizon; enlarge it");
    const Word& w = (out.startup && c == *out.startup) ? table.words[table.coded[0] - 1] : table.words[c - 1];
    out.lengths[c] = w.size();
  }
  for (Symbol c = 1; c <= startup_code; ++c)
    if (const auto it = images.find(c); it != images.end()) rules.emplace_back(c, it->second);
  out.morphism = Morphism(std::move(rules), names);
  return out;
}

/// Relabels a derived morphism so that regular return words are numbered by
/// increasing length (1 = shortest) and the startup letter comes last. The
/// returned coding maps each new letter to the length of its return word.
struct LengthCoded {
  Morphism morphism;
  Coding relabel;  // old code -> new code
  Coding length;   // new code -> return-word length
  Symbol seed = 0;
};

inline LengthCoded code_by_length(const DerivedMorphism& d) {
  std::vector<Symbol> regular;
  for (Symbol c : d.morphism.alphabet())
    if (!d.startup || c != *d.startup) regular.push_back(c);
  std::ranges::stable_sort(regular, [&](Symbol a, Symbol b) { return d.lengths.at(a) < d.lengths.at(b); });
  LengthCoded out;
  Symbol next = 1;
  for (Symbol c : regular) {
    out.length.set(next, static_cast<Symbol>(d.lengths.at(c)));
    out.relabel.set(c, next++);
  }
  if (d.startup && d.morphism.contains(*d.startup)) {
    out.length.set(next, static_cast<Symbol>(d.lengths.at(*d.startup)));
    out.relabel.set(*d.startup, next);
  }
  std::vector<std::pair<Symbol, Word>> rules;
  for (Symbol c : d.morphism.alphabet()) rules.emplace_back(out.relabel(c), out.relabel(d.morphism.image(c)));
  std::ranges::sort(rules, {}, &std::pair<Symbol, Word>::first);
  out.morphism = Morphism(std::move(rules));
  out.seed = out.relabel(d.seed);
  return out;
}

enum class ConjugateSide {
  StripLeading,   // x -> c^{-1} m(x) c
  StripTrailing,  // x -> c m(x) c^{-1}
};

inline Morphism conjugate(const Morphism& m, const Word& c, ConjugateSide side) {
  std::vector<std::pair<Symbol, Word>> rules;
  for (Symbol s : m.alphabet()) {
    const Word& img = m.image(s);
    if (img.size() <= c.size()) throw MorphismError("image of " + m.names()(s) + " is too short to conjugate");
    Word out;
    if (side == ConjugateSide::StripLeading) {
      if (!std::equal(c.begin(), c.end(), img.begin()))
        throw MorphismError("image of " + m.names()(s) + " does not start with the conjugating word");
      out.assign(img.begin() + static_cast<std::ptrdiff_t>(c.size()), img.end());
      out.insert(out.end(), c.begin(), c.end());
    } else {
      if (!std::equal(c.rbegin(), c.rend(), img.rbegin()))
        throw MorphismError("image of " + m.names()(s) + " does not end with the conjugating word");
      out = c;
      out.insert(out.end(), img.begin(), img.end() - static_cast<std::ptrdiff_t>(c.size()));
    }
    rules.emplace_back(s, std::move(out));
  }
  return Morphism(std::move(rules), m.names());
}

/// Splits `w` at the occurrences of the table's marker and codes the pieces.
inline Word factorize(const Word& w, const ReturnWordTable& table) {
  const auto occ = occurrences_of(w, table.marker);
  if (occ.empty() || occ.front() != 1) throw MorphismError("word does not start with the marker");
  Word out;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    const std::size_t end = i + 1 < occ.size() ? occ[i + 1] - 1 : w.size();
    const Word piece(w.begin() + static_cast<std::ptrdiff_t>(occ[i] - 1), w.begin() + static_cast<std::ptrdiff_t>(end));
    const auto code = table.code_of(piece);
    if (!code) {
      std::string text;
      for (Symbol s : piece) text += std::to_string(s) + ' ';
      throw MorphismError("piece '" + text + "' is not a return word");
    }
    out.push_back(*code);
  }
  return out;
}

/// Word-level route: code each m(r) as a concatenation of return words.
inline Morphism derive_by_factorization(const Morphism& m, const ReturnWordTable& table) {
  std::vector<std::pair<Symbol, Word>> rules;
  for (std::size_t i = 0; i < table.words.size(); ++i)
    rules.emplace_back(static_cast<Symbol>(i + 1), factorize(morph::apply(m, table.words[i]), table));
  return Morphism(std::move(rules));
}

}  // namespace lrfill::morph
