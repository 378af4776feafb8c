#pragma once

#include <vector>

#include "lrfill/analysis/report.hpp"
#include "lrfill/analysis/sequences.hpp"
#include "lrfill/analysis/types.hpp"
#include "lrfill/fill.hpp"
#include "lrfill/morph/blocks.hpp"
#include "lrfill/morph/catalog.hpp"

namespace lrfill::analysis {

/// Positions n <= n_max with Π36(n) = Π42(n).
inline std::vector<Position> coincidence_sequence(const PartialPermutation& pi36, const PartialPermutation& pi42,
                                                  Position n_max) {
  if (pi36.defined_prefix_length() < n_max || pi42.defined_prefix_length() < n_max)
    throw std::out_of_range("coincidence needs both permutations on 1..n_max");
  std::vector<Position> out;
  for (Position n = 1; n <= n_max; ++n)
    if (pi36[n] == pi42[n]) out.push_back(n);
  return out;
}

inline std::vector<Position> coincidence_sequence(Position n_max) {
  return coincidence_sequence(fill_prefix(RulePreset::Rule36, n_max), fill_prefix(RulePreset::Rule42, n_max), n_max);
}

/// I4: position 1 together with the type-IV positions of Π42.
inline std::vector<Position> type_four_positions(const PartialPermutation& pi42, Position n_max) {
  const auto labels = classify(pi42, ruleset(RulePreset::Rule42), n_max);
  std::vector<Position> out{1};
  for (Position n = 2; n <= n_max; ++n)
    if (labels[n - 1] == TypeLabel::IV) out.push_back(n);
  return out;
}

namespace detail {
inline void compare_sets(Claim& c, const std::vector<Position>& want, const std::vector<Position>& got) {
  const std::size_t common = std::min(want.size(), got.size());
  for (std::size_t i = 0; i < common; ++i)
    if (want[i] != got[i]) {
      c.fail(std::min(want[i], got[i]), want[i], got[i]);
      return;
    }
  if (want.size() != got.size())
    c.fail(common + 1, want.size() > common ? std::to_string(want[common]) : "end",
           got.size() > common ? std::to_string(got[common]) : "end");
}
}  // namespace detail

/// C = I4 up to n_max, the product-morphism view of C, and the gap identity
/// ΔI4(n+1) = λ(k(n)) for n = 1..gap_count.
inline Report verify_coincidence(Position n_max, std::size_t gap_count) {
  const auto pi36 = fill_prefix(RulePreset::Rule36, n_max);
  const auto pi42 = fill_prefix(RulePreset::Rule42, n_max);
  const auto c = coincidence_sequence(pi36, pi42, n_max);
  const auto i4 = type_four_positions(pi42, n_max);
  Report r;

  Claim eq("coincidence.C_eq_I4", "C = {1} u {n : Pi_42(n) has type IV}", n_max);
  detail::compare_sets(eq, i4, c);
  eq.detail("size", c.size());
  r.add(std::move(eq));

  Claim both("coincidence.both_IV", "Pi(n) = Pi_42(n) for n > 1 iff both entries have type IV", n_max);
  {
    const auto l36 = classify(pi36, ruleset(RulePreset::Rule36), n_max);
    const auto l42 = classify(pi42, ruleset(RulePreset::Rule42), n_max);
    for (Position n = 2; n <= n_max; ++n) {
      const bool same = pi36[n] == pi42[n];
      const bool iv = l36[n - 1] == TypeLabel::IV && l42[n - 1] == TypeLabel::IV;
      if (!both.expect(same == iv, n, iv ? "coincidence" : "none", same ? "coincidence" : "none")) break;
    }
  }
  r.add(std::move(both));

  Claim prod("coincidence.product", "C = positions of (1,5) or (4,4) in the fixed point of sigma36 x sigma42", n_max);
  {
    const auto pm = morph::product_morphism(morph::catalog::sigma36(), morph::catalog::sigma42(), {1, 5});
    const auto w = morph::fixed_point(pm.morphism, pm.seed).take(n_max);
    std::vector<Position> from_product;
    for (Position n = 1; n <= n_max; ++n) {
      const auto [a, b] = pm.pairs[w[n - 1] - 1];
      if ((a == 1 && b == 5) || (a == 4 && b == 4)) from_product.push_back(n);
    }
    detail::compare_sets(prod, c, from_product);
    prod.detail("pairs", pm.pairs.size());
  }
  r.add(std::move(prod));

  Claim gaps("coincidence.gaps", "Delta I4(n+1) = lambda(k(n))", gap_count);
  {
    Position span = std::max<Position>(n_max, 16);
    auto set = i4;
    while (set.size() < gap_count + 2) {
      span *= 2;
      set = type_four_positions(fill_prefix(RulePreset::Rule42, span), span);
    }
    const auto d = delta(set);
    const auto k = morph::catalog::k().take(gap_count);
    const auto lambda = morph::catalog::lambda_kappa();
    for (std::size_t n = 1; n <= gap_count; ++n) {
      const auto want = static_cast<std::int64_t>(lambda(k[n - 1]));
      if (!gaps.expect(d[n] == want, n, want, d[n])) break;
    }
  }
  r.add(std::move(gaps));
  return r;
}

}  // namespace lrfill::analysis
