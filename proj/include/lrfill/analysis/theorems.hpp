#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrfill/analysis/report.hpp"
#include "lrfill/analysis/sequences.hpp"
#include "lrfill/analysis/types.hpp"
#include "lrfill/fill.hpp"
#include "lrfill/morph/catalog.hpp"

namespace lrfill::analysis {

namespace detail {

inline std::string variant_tag(RulePreset p) { return preset_name(p); }

struct Typed {
  PartialPermutation perm;
  std::vector<TypeLabel> labels;  // labels[n-1] is the type of entry n

  [[nodiscard]] TypeLabel at(Position n) const { return labels[n - 1]; }
};

inline Typed typed_prefix(RulePreset p, Position n_max) {
  Typed t{fill_prefix(p, n_max), {}};
  t.labels = classify(t.perm, ruleset(p), n_max);
  return t;
}

inline bool is_one_of(TypeLabel t, TypeLabel a, TypeLabel b) { return t == a || t == b; }

}  // namespace detail

/// Checks clauses a)-d) of the type theorem of the rule (k ranges over 1, 2, ...).
inline Report verify_type_theorem(RulePreset p, Position n_max) {
  if (n_max < 9) throw std::invalid_argument("type theorem checks need n_max >= 9");
  using enum TypeLabel;
  const auto typed = detail::typed_prefix(p, n_max);
  const std::string tag = "types." + detail::variant_tag(p);
  Report r;

  if (p == RulePreset::Rule36 || p == RulePreset::RuleEven) {
    Claim a(tag + ".a", "Pi(n) never has type II", n_max);
    Claim b(tag + ".b", "n=3k => type IV", n_max);
    Claim c(tag + ".c", "n=3k+2 => type I", n_max);
    Claim d(tag + ".d", "n=3k+1 => type I iff Pi(k+1) type I, type III iff Pi(k+1) type III or IV", n_max);
    for (Position n = 1; n <= n_max; ++n) {
      const TypeLabel t = typed.at(n);
      a.expect(t != II, n, "not II", roman(t));
      if (n >= 3 && n % 3 == 0) b.expect(t == IV, n, "IV", roman(t));
      if (n >= 5 && n % 3 == 2) c.expect(t == I, n, "I", roman(t));
      if (n >= 4 && n % 3 == 1) {
        const TypeLabel parent = typed.at((n - 1) / 3 + 1);
        const TypeLabel want = parent == I ? I : (detail::is_one_of(parent, III, IV) ? III : parent);
        d.expect(t == want, n, roman(want), roman(t));
      }
    }
    r.add(std::move(a));
    r.add(std::move(b));
    r.add(std::move(c));
    r.add(std::move(d));
  } else if (p == RulePreset::RuleOdd) {
    Claim a(tag + ".a", "Pi_odd(n) never has type I", n_max);
    Claim b(tag + ".b", "n=3k+1 => type III", n_max);
    Claim c(tag + ".c", "n=3k+2 => type II", n_max);
    Claim d(tag + ".d", "n=3k => type II iff Pi_odd(k) type II, type IV iff Pi_odd(k) type III or IV", n_max);
    std::uint64_t type_one = 0;
    for (Position n = 1; n <= n_max; ++n) {
      const TypeLabel t = typed.at(n);
      if (t == I) ++type_one;
      a.expect(t != I, n, "not I", roman(t));
      if (n >= 4 && n % 3 == 1) b.expect(t == III, n, "III", roman(t));
      if (n >= 5 && n % 3 == 2) c.expect(t == II, n, "II", roman(t));
      if (n >= 3 && n % 3 == 0) {
        const TypeLabel parent = typed.at(n / 3);
        const TypeLabel want = parent == II ? II : (detail::is_one_of(parent, III, IV) ? IV : parent);
        d.expect(t == want, n, roman(want), roman(t));
      }
    }
    a.detail("type_I_entries", type_one);
    r.add(std::move(a));
    r.add(std::move(b));
    r.add(std::move(c));
    r.add(std::move(d));
  } else if (p == RulePreset::Rule42) {
    Claim a(tag + ".a", "Pi_42(n) never has type I", n_max);
    Claim b(tag + ".b", "n=3k+1 => type II", n_max);
    Claim c(tag + ".c", "n=3k+2 => type III", n_max);
    Claim d(tag + ".d", "n=3k+3 => type II iff Pi_42(k+1) type II, type IV iff Pi_42(k+1) type III or IV", n_max);
    Claim v(tag + ".v", "the only type V entry is Pi_42(1)", n_max);
    for (Position n = 1; n <= n_max; ++n) {
      const TypeLabel t = typed.at(n);
      a.expect(t != I, n, "not I", roman(t));
      v.expect((t == V) == (n == 1), n, n == 1 ? "V" : "not V", roman(t));
      if (n >= 4 && n % 3 == 1) b.expect(t == II, n, "II", roman(t));
      if (n >= 5 && n % 3 == 2) c.expect(t == III, n, "III", roman(t));
      if (n >= 6 && n % 3 == 0) {
        const TypeLabel parent = typed.at(n / 3);
        const TypeLabel want = parent == II ? II : (detail::is_one_of(parent, III, IV) ? IV : parent);
        d.expect(t == want, n, roman(want), roman(t));
      }
    }
    r.add(std::move(a));
    r.add(std::move(b));
    r.add(std::move(c));
    r.add(std::move(d));
    r.add(std::move(v));
  } else {
    throw std::invalid_argument("no type theorem for rule " + preset_name(p));
  }
  return r;
}

/// Type word of the rule equals the fixed point of its type morphism
/// (rule 42 from n = 2 on).
inline Report verify_morphism_theorem(RulePreset p, Position n_max) {
  const auto typed = detail::typed_prefix(p, n_max);
  const morph::Word fp = type_sequence(p).take(n_max);
  const Position from = p == RulePreset::Rule42 ? 2 : 1;
  Claim c("morphism." + detail::variant_tag(p), "type of Pi(n) is the n-th letter of the type fixed point", n_max);
  for (Position n = from; n <= n_max; ++n)
    if (!c.expect(static_cast<morph::Symbol>(typed.at(n)) == fp[n - 1], n, fp[n - 1],
                  static_cast<int>(typed.at(n))))
      break;
  c.detail("from", from);
  Report r;
  r.add(std::move(c));
  return r;
}

/// Lemma on step 2n-1, Π(3n)=2n, injectivity, Π_even = Π and determinism for
/// the standard rule.
inline Report verify_fill_properties(Position n_max) {
  Report r;
  {
    Claim lemma("fill.lemma", "after step 2n-1 positions 1..n are defined (standard rule)", n_max);
    FillingProcedure proc(rule(RulePreset::Rule36), {.capacity = std::nullopt, .track_inverse = false});
    for (Position n = 1; n <= n_max; ++n) {
      proc.run_to(2 * n - 1);
      if (!lemma.expect(proc.current().defined_prefix_length() >= n, n, ">= n", proc.current().defined_prefix_length()))
        break;
    }
    r.add(std::move(lemma));
  }
  const Position steps = 2 * n_max;
  const auto pi = fill(RulePreset::Rule36, steps);
  {
    Claim values("fill.values_assigned", "after 2n steps every value 1..n has a position", n_max);
    for (Value v = 1; v <= n_max; ++v)
      if (!values.expect(pi.position_of(v).has_value(), v, "assigned", "missing")) break;
    r.add(std::move(values));
  }
  {
    Claim triple("fill.triple", "Pi(3n) = 2n", n_max);
    for (Position n = 1; 3 * n <= pi.defined_prefix_length(); ++n)
      if (!triple.expect(pi[3 * n] == 2 * n, 3 * n, 2 * n, pi[3 * n])) break;
    r.add(std::move(triple));
  }
  {
    Claim inj("fill.injective", "no value is stored twice (all presets)", steps);
    for (RulePreset p : {RulePreset::Rule36, RulePreset::RuleEven, RulePreset::RuleOdd, RulePreset::Rule42,
                         RulePreset::UnitShift, RulePreset::Degenerate}) {
      const auto perm = p == RulePreset::Rule36 ? pi : fill(p, steps);
      std::vector<bool> seen(steps + 1, false);
      for (Position n = 1; n <= perm.size(); ++n) {
        if (!perm.defined(n)) continue;
        if (seen[perm[n]]) {
          inj.fail(n, "fresh value", perm[n]);
          break;
        }
        seen[perm[n]] = true;
      }
    }
    r.add(std::move(inj));
  }
  {
    Claim even("fill.even_equals_standard", "Pi_even = Pi (identical arrays)", steps);
    const auto pe = fill(RulePreset::RuleEven, steps);
    const Position len = std::max(pi.size(), pe.size());
    for (Position n = 1; n <= len; ++n) {
      const auto a = pi.at(n);
      const auto b = pe.at(n);
      if (a != b) {
        even.fail(n, a ? std::to_string(*a) : "-", b ? std::to_string(*b) : "-");
        break;
      }
    }
    r.add(std::move(even));
  }
  {
    Claim det("fill.deterministic", "two runs give identical arrays", steps);
    det.expect(fill(RulePreset::Rule36, steps) == pi, steps, "identical", "different");
    r.add(std::move(det));
  }
  return r;
}

/// Π(E(n)) = 3Π(n) - 2 and the two consequences used for the duplicate
/// question: (A) Π(m) ≡ 1 mod 3 iff m = E(k), (B) (Π(E(n))+2)/3 = Π(n).
inline Report self_similarity_check(Position n_max) {
  using enum TypeLabel;
  const Position top = self_similarity_index(n_max);
  const auto pi = fill_prefix(RulePreset::Rule36, top);
  const auto rs = ruleset(RulePreset::Rule36);
  Report r;

  Claim mono("selfsim.E_increasing", "E is strictly increasing", n_max);
  Claim sim("selfsim.main", "Pi(E(n)) = 3 Pi(n) - 2", n_max);
  Claim b("selfsim.B", "(Pi(E(n)) + 2)/3 = Pi(n)", n_max);
  for (Position n = 1; n <= n_max; ++n) {
    const auto e = self_similarity_index(n);
    if (n > 1) mono.expect(e > self_similarity_index(n - 1), n, "> E(n-1)", e);
    sim.expect(pi[e] == 3 * pi[n] - 2, n, 3 * pi[n] - 2, pi[e]);
    b.expect((pi[e] + 2) % 3 == 0 && (pi[e] + 2) / 3 == pi[n], n, pi[n], (pi[e] + 2) / 3.0);
  }

  Claim a("selfsim.A", "Pi(m) = 1 mod 3 iff m is in the range of E", top);
  {
    std::vector<bool> in_range(top + 1, false);
    for (Position n = 1; n <= n_max; ++n) in_range[self_similarity_index(n)] = true;
    for (Position m = 1; m <= top; ++m)
      if (!a.expect((pi[m] % 3 == 1) == in_range[m], m, in_range[m] ? "= 1 mod 3" : "!= 1 mod 3", pi[m] % 3)) break;
  }

  Claim res("selfsim.A_residues", "Pi(9n+r) for r in {2,3,5,7,8,9}: types I,IV,I,III,I,IV; residues 0,2,0,2,0,0", top);
  struct Case {
    unsigned r;
    TypeLabel type;
    unsigned residue;
  };
  static constexpr Case cases[] = {{2, I, 0}, {3, IV, 2}, {5, I, 0}, {7, III, 2}, {8, I, 0}, {9, IV, 0}};
  for (Position m = 2; m <= top; ++m) {
    const unsigned rr = static_cast<unsigned>((m - 1) % 9 + 1);
    for (const Case& c : cases) {
      if (c.r != rr) continue;
      const TypeLabel t = rs.classify(m, pi[m]);
      res.expect(t == c.type && pi[m] % 3 == c.residue, m,
                 std::string(roman(c.type)) + " with residue " + std::to_string(c.residue),
                 std::string(roman(t)) + " with residue " + std::to_string(pi[m] % 3));
    }
  }
  r.add(std::move(mono));
  r.add(std::move(sim));
  r.add(std::move(a));
  r.add(std::move(res));
  r.add(std::move(b));
  return r;
}

/// The sequence a(n) = (s(n)+2)/3, s(n) the n-th entry of Π congruent to
/// 1 mod 3, scanned directly from the permutation (no use of E).
inline std::vector<Value> residue_one_sequence(Position count) {
  const Position positions = 3 * count + 3;  // E(count) <= 3 count
  const auto pi = fill_window(RulePreset::Rule36, positions);
  return residue_class_sequence(pi, 1, 2, count);
}

/// A026186(n) = A026136(n) for n <= n_max, both generated.
inline Report duplicate_question(Position n_max) {
  const Position positions = 3 * n_max + 3;
  const auto pi = fill_window(RulePreset::Rule36, positions);
  const auto a = residue_class_sequence(pi, 1, 2, n_max);
  Claim c("duplicate.A026186", "(s(n)+2)/3 over entries = 1 mod 3 equals Pi(n)", n_max);
  for (Position n = 1; n <= n_max; ++n)
    if (!c.expect(a[n - 1] == pi[n], n, pi[n], a[n - 1])) break;
  Report r;
  r.add(std::move(c));
  return r;
}

namespace detail {
inline RecordAnalysis records_with_count(RulePreset p, std::size_t count) {
  Position n = 4 * count + 64;
  for (;;) {
    auto rec = records(fill_prefix(p, n), n);
    if (rec.positions.size() >= count + 3) return rec;
    n *= 2;
  }
}
}  // namespace detail

/// Record gap identities over the first `count` records.
inline Report verify_record_props(RulePreset p, std::size_t count) {
  using enum TypeLabel;
  const auto rec = detail::records_with_count(p, count);
  const std::string tag = "records." + detail::variant_tag(p);
  Report r;
  if (p == RulePreset::Rule36 || p == RulePreset::RuleEven) {
    const auto t = morph::catalog::t36().take(count);
    Claim pos(tag + ".pos", "Delta R_pos = t", count);
    Claim val(tag + ".rec", "Delta R_rec = 2t", count);
    Claim half(tag + ".remark", "Delta (R_rec - 1)/2 = t", count);
    for (std::size_t i = 1; i <= count; ++i) {
      pos.expect(rec.pos_deltas[i - 1] == t[i - 1], i, t[i - 1], rec.pos_deltas[i - 1]);
      val.expect(rec.val_deltas[i - 1] == 2 * std::int64_t{t[i - 1]}, i, 2 * t[i - 1], rec.val_deltas[i - 1]);
      const auto h = static_cast<std::int64_t>((rec.values[i] - 1) / 2) - static_cast<std::int64_t>((rec.values[i - 1] - 1) / 2);
      half.expect(h == t[i - 1], i, t[i - 1], h);
    }
    r.add(std::move(pos));
    r.add(std::move(val));
    r.add(std::move(half));
  } else if (p == RulePreset::RuleOdd) {
    const auto t = morph::catalog::t_odd().take(count + 2);
    Claim pos(tag + ".pos", "T(Delta R_opos) = T^2(t): Delta R_opos(n+1) = t(n+2)", count);
    Claim val(tag + ".rec", "T(Delta R_orec) = 2 T^2(t)", count);
    for (std::size_t n = 1; n <= count; ++n) {
      pos.expect(rec.pos_deltas[n] == t[n + 1], n, t[n + 1], rec.pos_deltas[n]);
      val.expect(rec.val_deltas[n] == 2 * std::int64_t{t[n + 1]}, n, 2 * t[n + 1], rec.val_deltas[n]);
    }
    r.add(std::move(pos));
    r.add(std::move(val));
  } else if (p == RulePreset::Rule42) {
    const auto t = morph::catalog::t42().take(count + 1);
    Claim pos(tag + ".pos", "Delta R_pos(n+1) = t(n) for n >= 2", count);
    Claim val(tag + ".rec", "Delta R_rec(n+1) = 2 t(n) for n >= 2", count);
    Claim even(tag + ".even", "records after the first are even", count);
    for (std::size_t n = 2; n <= count; ++n) {
      pos.expect(rec.pos_deltas[n] == t[n - 1], n, t[n - 1], rec.pos_deltas[n]);
      val.expect(rec.val_deltas[n] == 2 * std::int64_t{t[n - 1]}, n, 2 * t[n - 1], rec.val_deltas[n]);
    }
    for (std::size_t i = 1; i < rec.values.size(); ++i) even.expect(rec.values[i] % 2 == 0, i + 1, "even", rec.values[i]);
    r.add(std::move(pos));
    r.add(std::move(val));
    r.add(std::move(even));
  } else {
    throw std::invalid_argument("no record propositions for rule " + preset_name(p));
  }

  // Records sit exactly at the entries of the record type (plus position 1).
  const TypeLabel record_type = (p == RulePreset::Rule36 || p == RulePreset::RuleEven) ? I : II;
  const Position span = rec.positions.back();
  const auto typed = detail::typed_prefix(p, span);
  Claim at_type(tag + ".type", std::string("records are exactly the entries of type ") + roman(record_type), span);
  std::size_t idx = 0;
  for (Position n = 1; n <= span; ++n) {
    const bool is_record = idx < rec.positions.size() && rec.positions[idx] == n;
    if (is_record) ++idx;
    const bool typed_record = n == 1 || typed.at(n) == record_type;
    if (!at_type.expect(is_record == typed_record, n, typed_record ? "record" : "no record",
                        is_record ? "record" : "no record"))
      break;
  }
  r.add(std::move(at_type));
  return r;
}

}  // namespace lrfill::analysis
