// Walks through the main objects: the three permutations, their type words,
// the morphisms behind them and a handful of checks.

#include <iostream>

#include "lrfill/lrfill.hpp"

int main() {
  using namespace lrfill;
  namespace cat = morph::catalog;

  for (RulePreset p : {RulePreset::Rule36, RulePreset::RuleOdd, RulePreset::Rule42}) {
    const auto perm = fill_prefix(p, 20);
    std::cout << "rule " << preset_name(p) << ":";
    for (Value v : defined_values(perm, 20)) std::cout << ' ' << v;
    const auto labels = analysis::classify(perm, analysis::ruleset(p), 20);
    std::cout << "\n  types " << analysis::type_string(labels) << '\n';
  }

  const auto sigma = cat::sigma36();
  std::cout << "sigma36: " << sigma.to_string() << "\n  fixed point "
            << sigma.format_word(cat::s36().take(30)) << '\n';

  const auto table = morph::return_words(cat::s36(), morph::word("1"), 2000);
  const auto derived = morph::code_by_length(morph::derived_morphism(sigma, table));
  std::cout << "return words of 1 give " << derived.morphism.to_string() << '\n';

  analysis::Report r;
  r.append(analysis::self_similarity_check(2000));
  r.append(analysis::verify_coincidence(2000, 200));
  std::cout << analysis::format_plain(r);
  return r.pass() ? 0 : 1;
}
