#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lrfill/morph/merge.hpp"
#include "lrfill/morph/morphism.hpp"
#include "lrfill/morph/sequence.hpp"

namespace lrfill::morph {

/// Letter-to-word map used as a decoration.
using Decoration = std::map<Symbol, Word>;

inline Word decorate_word(const Decoration& delta, const Word& w) {
  Word out;
  for (Symbol s : w) {
    const auto it = delta.find(s);
    if (it == delta.end()) throw MorphismError("decoration has no image for symbol " + std::to_string(s));
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

struct DecorationResult {
  Morphism theta;  // merged morphism
  Coding coding;   // theta letters -> decoration output letters
  Symbol seed = 0;

  // Intermediate stages of the natural algorithm, over sub-letters (x, j)
  // named x, x', x'', ...
  Morphism split;                             // per-sub-letter images before merging
  Coding split_coding;                        // sub-letter -> output letter
  std::vector<std::pair<Word, Word>> blocks;  // block of x -> block image
  std::map<Symbol, Symbol> merged_into;       // sub-letter -> theta letter
  std::size_t verified = 0;                   // horizon on which coding(fp theta) == delta(fp m) was checked
};

/// Natural algorithm: realises delta(x) for the fixed point x of m as a coded
/// fixed point. Each letter a is split into |delta(a)| sub-letters; the block
/// image of a is the concatenation of the blocks of m(a). The first
/// |delta(a)|-1 sub-letters each take the block of one letter of m(a), the
/// last sub-letter takes the rest. Sub-letters are then merged as far as the
/// coding allows.
inline DecorationResult decorate(const Morphism& m, Symbol seed, const Decoration& delta, std::size_t horizon,
                                 const SymbolNames& output_names = {}) {
  DecorationResult out;

  std::map<Symbol, std::vector<Symbol>> subs;
  SymbolNames sub_names;
  Symbol next = 0;
  for (Symbol a : m.alphabet()) {
    const auto it = delta.find(a);
    if (it == delta.end() || it->second.empty())
      throw MorphismError("decoration image of " + m.names()(a) + " is missing or empty");
    for (std::size_t j = 0; j < it->second.size(); ++j) {
      sub_names.set(next, m.names()(a) + std::string(j, '\''));
      out.split_coding.set(next, it->second[j]);
      subs[a].push_back(next++);
    }
  }

  auto block_of_word = [&](const Word& w) {
    Word b;
    for (Symbol y : w) b.insert(b.end(), subs[y].begin(), subs[y].end());
    return b;
  };

  std::vector<std::pair<Symbol, Word>> split_rules;
  for (Symbol a : m.alphabet()) {
    const Word& img = m.image(a);
    const std::size_t parts = subs[a].size();
    if (img.size() < parts)
      throw MorphismError("inconsistent split: image of " + m.names()(a) + " has " + std::to_string(img.size()) +
                          " letters but " + std::to_string(parts) + " sub-letters need images");
    out.blocks.emplace_back(subs[a], block_of_word(img));
    for (std::size_t j = 0; j < parts; ++j) {
      const auto first = img.begin() + static_cast<std::ptrdiff_t>(j);
      const auto last = (j + 1 == parts) ? img.end() : first + 1;
      split_rules.emplace_back(subs[a][j], block_of_word(Word(first, last)));
    }
  }
  out.split = Morphism(std::move(split_rules), sub_names);

  // Merge: classes of the coarsest congruence become theta's letters. The
  // first class carrying output letter v is named v, later ones vb, vbb, ...
  const auto cls = coarsest_congruence(out.split, out.split_coding);
  std::map<std::size_t, Symbol> class_code;
  for (const auto& [x, c] : cls) class_code[c] = out.split_coding(x);
  std::vector<std::size_t> order;
  for (const auto& [c, v] : class_code) order.push_back(c);
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) { return class_code[a] < class_code[b]; });

  Symbol fresh = 0;
  for (const auto& [x, img] : delta)
    for (Symbol v : img) fresh = std::max(fresh, v + 1);
  for (Symbol a : m.alphabet()) fresh = std::max(fresh, a + 1);

  std::map<std::size_t, Symbol> class_symbol;
  std::map<Symbol, int> copies;
  SymbolNames theta_names;
  for (std::size_t c : order) {
    const Symbol v = class_code[c];
    const int dup = copies[v]++;
    const Symbol id = dup == 0 ? v : fresh++;
    class_symbol[c] = id;
    theta_names.set(id, output_names(v) + std::string(static_cast<std::size_t>(dup), 'b'));
    out.coding.set(id, v);
  }
  for (const auto& [x, c] : cls) out.merged_into[x] = class_symbol[c];

  Coding to_theta;
  for (const auto& [x, t] : out.merged_into) to_theta.set(x, t);
  std::vector<std::pair<Symbol, Word>> theta_rules;
  for (std::size_t c : order) {
    const auto rep = std::ranges::find_if(cls, [&](const auto& kv) { return kv.second == c; })->first;
    theta_rules.emplace_back(class_symbol[c], to_theta(out.split.image(rep)));
  }
  out.theta = Morphism(std::move(theta_rules), theta_names);
  out.seed = to_theta(subs[seed].front());

  if (horizon > 0) {
    const Word lhs = fixed_point(out.theta, out.seed).coded(out.coding).take(horizon);
    const auto x = fixed_point(m, seed);
    Word rhs;
    for (std::size_t i = 1; rhs.size() < horizon; ++i) {
      const Word& d = delta.at(x.at(i));
      rhs.insert(rhs.end(), d.begin(), d.end());
    }
    rhs.resize(horizon);
    if (lhs != rhs) throw MorphismError("decoration check failed: coded fixed point differs from the decorated one");
    out.verified = horizon;
  }
  return out;
}

}  // namespace lrfill::morph
