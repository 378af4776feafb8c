#pragma once

#include <cstdint>
#include <ranges>
#include <stdexcept>
#include <vector>

#include "lrfill/fill.hpp"

namespace lrfill::analysis {

/// First differences: out[i] = seq[i+1] - seq[i].
template <std::ranges::input_range R>
std::vector<std::int64_t> delta(const R& seq) {
  std::vector<std::int64_t> out;
  bool first = true;
  std::int64_t prev = 0;
  for (const auto& x : seq) {
    const auto v = static_cast<std::int64_t>(x);
    if (!first) out.push_back(v - prev);
    prev = v;
    first = false;
  }
  if (out.empty()) throw std::invalid_argument("delta needs at least two terms");
  return out;
}

/// Running maxima of a permutation prefix and their first differences.
struct RecordAnalysis {
  std::vector<Position> positions;
  std::vector<Value> values;
  std::vector<std::int64_t> pos_deltas;
  std::vector<std::int64_t> val_deltas;
};

inline RecordAnalysis records(const PartialPermutation& perm, Position n_max) {
  if (perm.defined_prefix_length() < n_max)
    throw std::out_of_range("records need positions 1.." + std::to_string(n_max) + " defined");
  RecordAnalysis r;
  Value best = 0;
  for (Position n = 1; n <= n_max; ++n) {
    if (perm[n] > best) {
      best = perm[n];
      r.positions.push_back(n);
      r.values.push_back(best);
    }
  }
  if (r.positions.size() >= 2) {
    r.pos_deltas = delta(r.positions);
    r.val_deltas = delta(r.values);
  }
  return r;
}

/// Self-similarity index map: E(3q+1)=9q+1, E(3q+2)=9q+4, E(3q+3)=9q+6 (n >= 1).
inline std::uint64_t self_similarity_index(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("E is defined for n >= 1");
  const std::uint64_t q = (n - 1) / 3;
  switch ((n - 1) % 3) {
    case 0:
      return 9 * q + 1;
    case 1:
      return 9 * q + 4;
    default:
      return 9 * q + 6;
  }
}

/// Π⊕(n) = Π(n+1) - 1 for n = 1..n_max, from the standard rule.
inline std::vector<Value> oplus_transform(const PartialPermutation& pi, Position n_max) {
  if (pi.defined_prefix_length() < n_max + 1) throw std::out_of_range("oplus needs Π on 1..n_max+1");
  std::vector<Value> out;
  out.reserve(n_max);
  for (Position n = 1; n <= n_max; ++n) out.push_back(pi[n + 1] - 1);
  return out;
}

inline std::vector<Value> oplus_transform(Position n_max) {
  return oplus_transform(fill_prefix(RulePreset::Rule36, n_max + 1), n_max);
}

/// a(j) = (s(j) + add) / 3 where s(j) is the j-th entry of the permutation
/// prefix that is congruent to `residue` mod 3, for j = 1..count.
inline std::vector<Value> residue_class_sequence(const PartialPermutation& perm, unsigned residue, unsigned add,
                                                 std::size_t count) {
  std::vector<Value> out;
  out.reserve(count);
  for (Position m = 1; m <= perm.defined_prefix_length() && out.size() < count; ++m)
    if (perm[m] % 3 == residue) out.push_back((perm[m] + add) / 3);
  if (out.size() < count) throw std::out_of_range("prefix too short for the requested residue-class terms");
  return out;
}

/// Π with enough positions defined (1..positions) using a truncated store: the
/// left probe at step n is ceil(n/2) for the built-in half rules, so 2*positions
/// steps over a store of `positions` cells are exact.
inline PartialPermutation fill_window(RulePreset p, Position positions) {
  FillOptions opt;
  opt.capacity = positions;
  opt.track_inverse = false;
  FillingProcedure proc(rule(p), opt);
  proc.run_until_defined(positions, 2 * positions + 2);
  return std::move(proc).take();
}

}  // namespace lrfill::analysis
