#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrfill/fill.hpp"
#include "lrfill/morph/catalog.hpp"

namespace lrfill::analysis {

/// Type of an entry; the numeric value doubles as the letter of the type word.
enum class TypeLabel : std::uint8_t { I = 1, II = 2, III = 3, IV = 4, V = 5 };

inline const char* roman(TypeLabel t) {
  static constexpr std::array<const char*, 6> names{"?", "I", "II", "III", "IV", "V"};
  return names[static_cast<std::size_t>(t)];
}

class UnclassifiableEntry : public std::runtime_error {
 public:
  UnclassifiableEntry(Position n, Value v, const std::string& why)
      : std::runtime_error("unclassifiable entry at n=" + std::to_string(n) + " (value " + std::to_string(v) +
                           "): " + why),
        n_(n) {}
  [[nodiscard]] Position n() const noexcept { return n_; }

 private:
  Position n_;
};

/// Exact value formulas for the types of one rule family, with the label the
/// first entry receives.
struct TypeRuleSet {
  RulePreset variant;
  TypeLabel first_entry;
  bool shifted_family;  // rule 42: (I) 2n+1, (III) (2n-1)/3, (V) n

  [[nodiscard]] bool matches(TypeLabel t, Position n, Value v) const {
    const unsigned __int128 n2 = 2 * static_cast<unsigned __int128>(n);
    const unsigned __int128 v1 = v;
    switch (t) {
      case TypeLabel::I:
        return shifted_family ? v1 == n2 + 1 : v1 + 1 == n2;
      case TypeLabel::II:
        return v1 == n2;
      case TypeLabel::III:
        return shifted_family ? 3 * v1 + 1 == n2 : 3 * v1 == n2 + 1;
      case TypeLabel::IV:
        return 3 * v1 == n2;
      case TypeLabel::V:
        return shifted_family && v == n;
    }
    return false;
  }

  /// Label of entry (n, v). Entry 1 gets `first_entry` (the formulas for I and
  /// III coincide there); every other entry must match exactly one formula.
  [[nodiscard]] TypeLabel classify(Position n, Value v) const {
    if (n == 1) {
      if (!matches(first_entry, n, v)) throw UnclassifiableEntry(n, v, "first entry does not fit its fixed type");
      return first_entry;
    }
    std::optional<TypeLabel> hit;
    for (auto t : {TypeLabel::I, TypeLabel::II, TypeLabel::III, TypeLabel::IV, TypeLabel::V}) {
      if (!matches(t, n, v)) continue;
      if (hit) throw UnclassifiableEntry(n, v, std::string("matches both ") + roman(*hit) + " and " + roman(t));
      hit = t;
    }
    if (!hit) throw UnclassifiableEntry(n, v, "matches no type formula");
    return *hit;
  }
};

inline TypeRuleSet ruleset(RulePreset p) {
  switch (p) {
    case RulePreset::Rule36:
    case RulePreset::RuleEven:
      return {p, TypeLabel::I, false};
    case RulePreset::RuleOdd:
      return {p, TypeLabel::III, false};
    case RulePreset::Rule42:
      return {p, TypeLabel::V, true};
    default:
      throw std::invalid_argument("no type table for rule " + preset_name(p));
  }
}

/// Labels of positions 1..n_max.
inline std::vector<TypeLabel> classify(const PartialPermutation& perm, const TypeRuleSet& rs, Position n_max) {
  std::vector<TypeLabel> out;
  out.reserve(n_max);
  for (Position n = 1; n <= n_max; ++n) {
    if (!perm.defined(n)) throw UnclassifiableEntry(n, 0, "entry is undefined");
    out.push_back(rs.classify(n, perm[n]));
  }
  return out;
}

inline morph::Word type_word(const std::vector<TypeLabel>& labels) {
  morph::Word out;
  out.reserve(labels.size());
  for (TypeLabel t : labels) out.push_back(static_cast<morph::Symbol>(t));
  return out;
}

inline std::string type_string(const std::vector<TypeLabel>& labels) {
  std::string out;
  out.reserve(labels.size());
  for (TypeLabel t : labels) out += static_cast<char>('0' + static_cast<int>(t));
  return out;
}

/// The fixed point whose letters are the types of the rule's entries.
inline morph::SymbolSequence type_sequence(RulePreset p) {
  switch (p) {
    case RulePreset::Rule36:
    case RulePreset::RuleEven:
      return morph::catalog::s36();
    case RulePreset::RuleOdd:
      return morph::catalog::s_odd();
    case RulePreset::Rule42:
      return morph::catalog::s42();
    default:
      throw std::invalid_argument("no type morphism for rule " + preset_name(p));
  }
}

}  // namespace lrfill::analysis
