#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrfill/morph/morphism.hpp"

namespace lrfill::morph {

struct MergeConflict {
  Symbol first;   // earlier letter of the identified pair
  Symbol second;  // letter whose coded image disagrees with `first`
  Word first_image;
  Word second_image;
};

struct MergeResult {
  std::optional<Morphism> morphism;
  std::optional<MergeConflict> conflict;

  [[nodiscard]] bool ok() const noexcept { return morphism.has_value(); }
};

/// Quotient of `m` by the letter identification `coding`: defined when any two
/// letters with the same code have the same coded image. Target letters keep
/// the order in which they first appear along m's alphabet.
inline MergeResult merge_letters(const Morphism& m, const Coding& coding, SymbolNames names = {}) {
  std::vector<std::pair<Symbol, Word>> rules;
  std::map<Symbol, Symbol> representative;
  MergeResult out;
  for (Symbol x : m.alphabet()) {
    const Symbol y = coding(x);
    Word img = coding(m.image(x));
    if (const auto it = representative.find(y); it != representative.end()) {
      const auto rule = std::ranges::find(rules, y, &std::pair<Symbol, Word>::first);
      if (rule->second != img) {
        out.conflict = MergeConflict{it->second, x, rule->second, img};
        return out;
      }
      continue;
    }
    representative.emplace(y, x);
    rules.emplace_back(y, std::move(img));
  }
  for (const auto& [y, x] : representative)
    if (!names.has_alias(y) && m.names().has_alias(y)) names.set(y, m.names()(y));
  out.morphism = Morphism(std::move(rules), std::move(names));
  return out;
}

/// Coarsest identification of letters that respects `coding` and is
/// compatible with `m` (Moore-style partition refinement). Maps each letter to
/// a class index 0..k-1, classes numbered by first appearance along m's
/// alphabet.
inline std::map<Symbol, std::size_t> coarsest_congruence(const Morphism& m, const Coding& coding) {
  const auto& alpha = m.alphabet();
  std::map<Symbol, std::size_t> cls;
  {
    std::map<Symbol, std::size_t> by_code;
    for (Symbol x : alpha) cls[x] = by_code.try_emplace(coding(x), by_code.size()).first->second;
  }
  std::size_t class_count = 0;
  for (;;) {
    // refinement only splits classes, so an unchanged count means stable
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> sig_to_class;
    std::map<Symbol, std::size_t> next;
    for (Symbol x : alpha) {
      std::vector<std::size_t> sig;
      for (Symbol y : m.image(x)) sig.push_back(cls[y]);
      next[x] = sig_to_class.try_emplace({cls[x], std::move(sig)}, sig_to_class.size()).first->second;
    }
    cls = std::move(next);
    if (sig_to_class.size() == class_count) return cls;
    class_count = sig_to_class.size();
  }
}

}  // namespace lrfill::morph
