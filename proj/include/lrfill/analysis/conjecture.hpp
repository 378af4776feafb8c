#pragma once

#include <algorithm>
#include <vector>

#include "lrfill/analysis/report.hpp"
#include "lrfill/analysis/sequences.hpp"
#include "lrfill/fill.hpp"
#include "lrfill/morph/catalog.hpp"

namespace lrfill::analysis {

struct ConjectureData {
  std::vector<Position> intersection;  // R_pos ∩ R_rec ∖ {1}, values <= n_max
  std::vector<Position> complement;    // 1..n_max minus R_pos ∪ R_rec
  std::vector<Position> halved;        // complement / 2, while every entry is even
  std::vector<Position> choral_ones;   // positions of 1 in the choral sequence
  std::size_t agreement = 0;           // common prefix length of halved and choral_ones
  bool complement_even = true;
};

/// Records of the standard rule compared over the value range 1..n_max.
inline ConjectureData conjecture_data(Position n_max) {
  // positions and values of records below n_max need about n_max positions
  const auto pi = fill_prefix(RulePreset::Rule36, n_max);
  const auto rec = records(pi, n_max);
  std::vector<bool> in_pos(n_max + 1, false), in_rec(n_max + 1, false);
  for (Position p : rec.positions) in_pos[p] = true;
  for (Value v : rec.values)
    if (v <= n_max) in_rec[v] = true;

  ConjectureData d;
  for (Position x = 1; x <= n_max; ++x) {
    if (x > 1 && in_pos[x] && in_rec[x]) d.intersection.push_back(x);
    if (!in_pos[x] && !in_rec[x]) d.complement.push_back(x);
  }
  for (Position x : d.complement) {
    if (x % 2 != 0) {
      d.complement_even = false;
      break;
    }
    d.halved.push_back(x / 2);
  }
  const Position horizon = n_max / 2 + 1;
  const auto ch = morph::catalog::choral_sequence().take(horizon);
  for (Position i = 1; i <= horizon; ++i)
    if (ch[i - 1] == 1) d.choral_ones.push_back(i);
  while (d.agreement < d.halved.size() && d.agreement < d.choral_ones.size() &&
         d.halved[d.agreement] == d.choral_ones[d.agreement])
    ++d.agreement;
  return d;
}

/// Empirical report on disjointness of R_pos and R_rec and on the halved
/// complement versus the choral sequence.
inline Report conjecture_check(Position n_max, std::size_t min_agreement = 0) {
  const auto d = conjecture_data(n_max);
  Report r;
  // both sequences start at Π(1) = 1; disjointness is checked from the second term on
  Claim disjoint("conjecture.disjoint", "R_pos and R_rec share no term besides their common start 1", n_max);
  if (!d.intersection.empty()) disjoint.fail(d.intersection.front(), "empty intersection", d.intersection.front());
  disjoint.detail("intersection_size", d.intersection.size());
  disjoint.empirical = true;
  r.add(std::move(disjoint));

  Claim even("conjecture.complement_even", "complement of R_pos u R_rec has only even entries", n_max);
  if (!d.complement_even) {
    const auto odd = std::ranges::find_if(d.complement, [](Position x) { return x % 2 != 0; });
    even.fail(*odd, "even", *odd);
  }
  even.detail("complement_size", d.complement.size());
  even.empirical = true;
  r.add(std::move(even));

  Claim choral("conjecture.choral", "halved complement = positions of 1 in the choral sequence", n_max);
  const std::size_t compared = std::min(d.halved.size(), d.choral_ones.size());
  if (d.agreement < compared)
    choral.fail(d.agreement + 1, d.choral_ones[d.agreement], d.halved[d.agreement]);
  else if (d.agreement < min_agreement)
    choral.fail(d.agreement, ">= " + std::to_string(min_agreement) + " agreeing terms", d.agreement);
  choral.detail("agreement", d.agreement);
  choral.empirical = true;
  r.add(std::move(choral));
  return r;
}

}  // namespace lrfill::analysis
