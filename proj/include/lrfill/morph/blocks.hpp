#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lrfill/morph/morphism.hpp"
#include "lrfill/morph/sequence.hpp"

namespace lrfill::morph {

enum class BlockOrder {
  Lexicographic,    // by m's alphabet order, letter by letter
  FirstOccurrence,  // order of appearance in the fixed point
};

/// Morphism induced on the length-k factors of a fixed point.
struct BlockMorphism {
  Morphism morphism;  // letters 1..blocks.size()
  std::vector<Word> blocks;
  Symbol seed = 1;
  std::size_t k = 1;

  /// Block letter -> its j-th symbol (1-indexed).
  [[nodiscard]] Coding projection(std::size_t j) const {
    if (j < 1 || j > k) throw MorphismError("projection coordinate out of range");
    Coding c;
    for (std::size_t i = 0; i < blocks.size(); ++i) c.set(static_cast<Symbol>(i + 1), blocks[i][j - 1]);
    return c;
  }
};

/// The image of block w is the |m(w_1)| consecutive length-k windows of m(w)
/// starting at offsets 0, 1, ... Blocks are the length-k factors of the first
/// `horizon` symbols of the fixed point, closed under taking images.
inline BlockMorphism k_block_morphism(const Morphism& m, Symbol seed, std::size_t k, std::size_t horizon,
                                      BlockOrder order = BlockOrder::Lexicographic) {
  if (k < 1) throw MorphismError("block length must be >= 1");
  if (horizon < k) throw MorphismError("horizon shorter than the block length");
  const Word u = fixed_point(m, seed).take(horizon);

  std::vector<Word> found;
  std::set<Word> known;
  auto note = [&](Word w) {
    if (known.insert(w).second) found.push_back(std::move(w));
  };
  for (std::size_t i = 0; i + k <= u.size(); ++i)
    note(Word(u.begin() + static_cast<std::ptrdiff_t>(i), u.begin() + static_cast<std::ptrdiff_t>(i + k)));

  auto windows = [&](const Word& w) {
    const Word img = morph::apply(m, w);
    const std::size_t count = m.image(w.front()).size();
    if (count + k - 1 > img.size())
      throw MorphismError("block image too short: image of a " + std::to_string(k) + "-block has " +
                          std::to_string(img.size()) + " letters");
    std::vector<Word> out;
    for (std::size_t i = 0; i < count; ++i)
      out.emplace_back(img.begin() + static_cast<std::ptrdiff_t>(i), img.begin() + static_cast<std::ptrdiff_t>(i + k));
    return out;
  };

  for (std::size_t i = 0; i < found.size(); ++i)
    for (Word& w : windows(found[i])) note(std::move(w));

  if (order == BlockOrder::Lexicographic) {
    std::ranges::sort(found, [&](const Word& a, const Word& b) {
      return std::ranges::lexicographical_compare(a, b, [&](Symbol x, Symbol y) { return m.order_of(x) < m.order_of(y); });
    });
  }

  BlockMorphism out;
  out.k = k;
  out.blocks = found;
  std::map<Word, Symbol> id;
  SymbolNames names;
  const bool compact = m.names().all_single_char(m.alphabet());
  for (std::size_t i = 0; i < found.size(); ++i) {
    id[found[i]] = static_cast<Symbol>(i + 1);
    std::string name;
    for (std::size_t j = 0; j < found[i].size(); ++j) name += (j && !compact ? "." : "") + m.names()(found[i][j]);
    names.set(static_cast<Symbol>(i + 1), name);
  }
  std::vector<std::pair<Symbol, Word>> rules;
  for (const Word& b : found) {
    Word img;
    for (const Word& w : windows(b)) img.push_back(id.at(w));
    rules.emplace_back(id.at(b), std::move(img));
  }
  out.morphism = Morphism(std::move(rules), names);
  out.seed = id.at(Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k)));
  return out;
}

/// Product substitution on reachable letter pairs.
struct ProductMorphism {
  Morphism morphism;  // letters 1..pairs.size(), in breadth-first discovery order
  std::vector<std::pair<Symbol, Symbol>> pairs;
  Coding first;
  Coding second;
  Symbol seed = 1;
};

inline ProductMorphism product_morphism(const Morphism& m1, const Morphism& m2, std::pair<Symbol, Symbol> seed) {
  ProductMorphism out;
  std::map<std::pair<Symbol, Symbol>, Symbol> id;
  std::deque<std::pair<Symbol, Symbol>> queue;
  auto visit = [&](std::pair<Symbol, Symbol> p) {
    if (const auto it = id.find(p); it != id.end()) return it->second;
    const auto s = static_cast<Symbol>(out.pairs.size() + 1);
    id.emplace(p, s);
    out.pairs.push_back(p);
    queue.push_back(p);
    return s;
  };
  visit(seed);
  std::vector<std::pair<Symbol, Word>> rules;
  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    const Word& ia = m1.image(a);
    const Word& ib = m2.image(b);
    if (ia.size() != ib.size())
      throw MorphismError("length mismatch on reachable pair (" + m1.names()(a) + "," + m2.names()(b) + "): " +
                          std::to_string(ia.size()) + " vs " + std::to_string(ib.size()));
    Word img;
    for (std::size_t i = 0; i < ia.size(); ++i) img.push_back(visit({ia[i], ib[i]}));
    rules.emplace_back(id.at({a, b}), std::move(img));
  }
  SymbolNames names;
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    const auto s = static_cast<Symbol>(i + 1);
    names.set(s, "(" + m1.names()(out.pairs[i].first) + "," + m2.names()(out.pairs[i].second) + ")");
    out.first.set(s, out.pairs[i].first);
    out.second.set(s, out.pairs[i].second);
  }
  std::ranges::sort(rules, {}, &std::pair<Symbol, Word>::first);
  out.morphism = Morphism(std::move(rules), names);
  out.seed = 1;
  return out;
}

}  // namespace lrfill::morph
