#pragma once

// Named substitutions behind the permutations produced by the built-in rules.

#include "lrfill/morph/decoration.hpp"
#include "lrfill/morph/morphism.hpp"
#include "lrfill/morph/sequence.hpp"

namespace lrfill::morph::catalog {

/// Types of the standard rule: 1 -> 114, 3 -> 314, 4 -> 314.
inline Morphism sigma36() { return {{1, word("114")}, {3, word("314")}, {4, word("314")}}; }
/// Types of the right-if-odd rule.
inline Morphism sigma_odd() { return {{2, word("322")}, {3, word("324")}, {4, word("324")}}; }
/// Types of rule 42 (5 marks the lone type-V entry).
inline Morphism sigma42() { return {{2, word("232")}, {3, word("234")}, {4, word("234")}, {5, word("524")}}; }

/// Record gaps of the standard rule.
inline Morphism tau36() { return {{1, word("12")}, {2, word("132")}, {3, word("1332")}}; }
/// Record gaps of the right-if-odd rule (after the shifts).
inline Morphism tau_odd() { return {{1, word("12")}, {2, word("312")}, {3, word("3312")}}; }
/// Record gaps of rule 42, with startup letter 4.
inline Morphism tau42() { return {{1, word("21")}, {2, word("213")}, {3, word("2133")}, {4, word("4213")}}; }
/// Conjugated return-word morphism of s_odd on marker 2, by lengths.
inline Morphism sigma_desc() { return {{1, word("12")}, {2, word("123")}, {3, word("1233")}}; }
/// Gaps of the coincidence set, with startup letter 4.
inline Morphism kappa() { return {{1, word("12")}, {2, word("123")}, {3, word("1233")}, {4, word("423")}}; }
/// Letter-to-letter map turning k into gaps of I4.
inline Coding lambda_kappa() { return {{1, 3}, {2, 6}, {3, 9}, {4, 6}}; }
/// Generates T(s36).
inline Morphism tau_shift36() { return {{1, word("141")}, {3, word("143")}, {4, word("143")}}; }
/// Stewart's choral sequence: 0 -> 001, 1 -> 011.
inline Morphism choral() { return {{0, word("001")}, {1, word("011")}}; }

/// tau_odd written on {a, b, c} = {1, 2, 3}.
inline Morphism tau_abc() {
  SymbolNames names;
  names.set(1, "a");
  names.set(2, "b");
  names.set(3, "c");
  return Morphism({{1, word("12")}, {2, word("312")}, {3, word("3312")}}, names);
}
/// a -> 2, b -> 23, c -> 243: the return words of 2 in s_odd.
inline Decoration delta_odd() { return {{1, word("2")}, {2, word("23")}, {3, word("243")}}; }

inline SymbolSequence s36() { return fixed_point(sigma36(), 1); }
inline SymbolSequence s_odd() { return fixed_point(sigma_odd(), 3); }
inline SymbolSequence s42() { return fixed_point(sigma42(), 5); }
inline SymbolSequence t36() { return fixed_point(tau36(), 1); }
inline SymbolSequence t_odd() { return fixed_point(tau_odd(), 1); }
inline SymbolSequence t42() { return fixed_point(tau42(), 4); }
inline SymbolSequence k() { return fixed_point(kappa(), 4); }
inline SymbolSequence x_tau() { return fixed_point(tau_abc(), 1); }
inline SymbolSequence choral_sequence() { return fixed_point(choral(), 0); }

}  // namespace lrfill::morph::catalog
