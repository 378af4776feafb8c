#pragma once

#include <vector>

#include "lrfill/analysis/report.hpp"
#include "lrfill/analysis/sequences.hpp"
#include "lrfill/analysis/types.hpp"
#include "lrfill/fill.hpp"
#include "lrfill/morph/blocks.hpp"
#include "lrfill/morph/catalog.hpp"

namespace lrfill::analysis {

/// Halved even values of Π_odd in position order.
inline std::vector<Value> halved_even_values(const PartialPermutation& pi_odd, Position n_max) {
  std::vector<Value> out;
  for (Position m = 1; m <= n_max; ++m)
    if (pi_odd[m] % 2 == 0) out.push_back(pi_odd[m] / 2);
  return out;
}

/// Π⊕(n) is the index m with h(m) = n, where h lists halved even values of
/// Π_odd; plus the facts behind it.
inline Report verify_oplus_prop(Position n_max) {
  using enum TypeLabel;
  const Position span = 3 * n_max + 9;
  const auto pi = fill_prefix(RulePreset::Rule36, span);
  const auto po = fill_prefix(RulePreset::RuleOdd, span);
  const auto oplus = oplus_transform(pi, n_max);
  const auto h = halved_even_values(po, span);
  Report r;

  Claim pos("oplus.position", "Pi_oplus(n) = index of n in (s(m)/2)", n_max);
  {
    std::vector<Position> index_of(n_max + 1, 0);
    for (std::size_t m = 0; m < h.size(); ++m)
      if (h[m] <= n_max && index_of[h[m]] == 0) index_of[h[m]] = m + 1;
    for (Position n = 1; n <= n_max; ++n)
      if (!pos.expect(index_of[n] == oplus[n - 1], n, oplus[n - 1], index_of[n])) break;
  }
  r.add(std::move(pos));

  Claim even("oplus.even_positions", "even values of Pi_odd sit exactly at positions = 2, 0 mod 3", span);
  for (Position m = 1; m <= span; ++m) {
    const bool want = m % 3 != 1;
    if (!even.expect((po[m] % 2 == 0) == want, m, want ? "even" : "odd", po[m])) break;
  }
  r.add(std::move(even));

  const auto l36 = classify(pi, ruleset(RulePreset::Rule36), span);
  const auto lodd = classify(po, ruleset(RulePreset::RuleOdd), span);
  Claim eqa("oplus.A", "Pi(3n+1) type I iff Pi_odd(3n) type IV", n_max);
  Claim eqb("oplus.B", "Pi(3n+1) type III iff Pi_odd(3n) type II", n_max);
  for (Position n = 1; 3 * n + 1 <= span && n <= n_max; ++n) {
    const TypeLabel a = l36[3 * n], b = lodd[3 * n - 1];
    eqa.expect((a == I) == (b == IV), n, roman(a), roman(b));
    eqb.expect((a == III) == (b == II), n, roman(a), roman(b));
  }
  r.add(std::move(eqa));
  r.add(std::move(eqb));

  Claim prod("oplus.product", "fixed point of tau_shift x sigma_odd projects to T(s) and s_odd, with (1,4) or (3,2) at every 3n",
             span);
  {
    const auto pm = morph::product_morphism(morph::catalog::tau_shift36(), morph::catalog::sigma_odd(), {1, 3});
    const auto w = morph::fixed_point(pm.morphism, pm.seed).take(span);
    const auto s = morph::catalog::s36().take(span + 1);
    const auto so = morph::catalog::s_odd().take(span);
    for (Position n = 1; n <= span; ++n) {
      const auto [a, b] = pm.pairs[w[n - 1] - 1];
      if (!prod.expect(a == s[n] && b == so[n - 1], n, std::to_string(s[n]) + "," + std::to_string(so[n - 1]),
                       std::to_string(a) + "," + std::to_string(b)))
        break;
      if (n % 3 == 0 && !prod.expect((a == 1 && b == 4) || (a == 3 && b == 2), n, "(1,4) or (3,2)",
                                     "(" + std::to_string(a) + "," + std::to_string(b) + ")"))
        break;
    }
    prod.detail("pairs", pm.pairs.size());
  }
  r.add(std::move(prod));
  return r;
}

}  // namespace lrfill::analysis
