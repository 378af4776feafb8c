#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrfill/analysis/coincidence.hpp"
#include "lrfill/analysis/sequences.hpp"
#include "lrfill/fill.hpp"
#include "lrfill/oeis/bfile.hpp"

namespace lrfill::oeis {

using Terms = std::vector<std::int64_t>;

/// Generator for an OEIS entry produced by this library.
struct SequenceSource {
  std::string id;
  std::string description;
  std::int64_t offset = 1;
  std::function<Terms(std::size_t count)> generate;
};

namespace gen {

template <class R>
Terms to_terms(const R& r, std::size_t count) {
  Terms out;
  for (const auto& x : r) {
    if (out.size() == count) break;
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

/// Grows the prefix length until `f(n)` yields at least `count` terms.
template <class F>
Terms grow(std::size_t count, Position start, F&& f) {
  for (Position n = std::max<Position>(start, 16);; n *= 2) {
    Terms t = f(n);
    if (t.size() >= count) {
      t.resize(count);
      return t;
    }
  }
}

inline Terms permutation(RulePreset p, std::size_t count) {
  return to_terms(defined_values(fill_prefix(p, count), count), count);
}

inline Terms inverse(RulePreset p, std::size_t count) {
  const auto perm = fill(p, count);
  Terms out;
  for (Value v = 1; v <= count; ++v) out.push_back(static_cast<std::int64_t>(*perm.position_of(v)));
  return out;
}

inline analysis::RecordAnalysis records_of(RulePreset p, Position n) { return analysis::records(fill_prefix(p, n), n); }

inline Terms record_positions(RulePreset p, std::size_t count) {
  return grow(count, 4 * count, [&](Position n) { return to_terms(records_of(p, n).positions, count); });
}

inline Terms record_values(RulePreset p, std::size_t count) {
  return grow(count, 4 * count, [&](Position n) { return to_terms(records_of(p, n).values, count); });
}

inline Terms half_record_values(RulePreset p, std::size_t count) {
  Terms v = record_values(p, count);
  for (auto& x : v) x = (x - 1) / 2;
  return v;
}

inline Terms half_record_gaps(RulePreset p, std::size_t count) {
  Terms v = record_values(p, count + 1);
  Terms out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back((v[i + 1] - v[i]) / 2);
  return out;
}

/// (s(n) + add) / div where s runs over the entries of Π with s = residue mod m.
inline Terms residue_class(RulePreset p, unsigned m, unsigned residue, unsigned add, unsigned div, std::size_t count) {
  return grow(count, 3 * count, [&](Position n) {
    const auto perm = fill_prefix(p, n);
    Terms out;
    for (Position i = 1; i <= n && out.size() < count; ++i)
      if (perm[i] % m == residue) out.push_back(static_cast<std::int64_t>((perm[i] + add) / div));
    return out;
  });
}

inline Terms even_values(RulePreset p, std::size_t count) { return residue_class(p, 2, 0, 0, 1, count); }

inline Terms coincidences(std::size_t count) {
  return grow(count, 6 * count, [&](Position n) { return to_terms(analysis::coincidence_sequence(n), count); });
}

}  // namespace gen

/// Every A-number this library can generate.
inline const std::map<std::string, SequenceSource>& registry() {
  static const std::map<std::string, SequenceSource> table = [] {
    using enum RulePreset;
    std::map<std::string, SequenceSource> t;
    auto add = [&](std::string id, std::string desc, std::function<Terms(std::size_t)> g) {
      t.emplace(id, SequenceSource{id, std::move(desc), 1, std::move(g)});
    };
    // (id, standard-rule version, right-if-even version)
    struct Pair {
      const char* std_id;
      const char* even_id;
      const char* desc;
      std::function<Terms(RulePreset, std::size_t)> g;
    };
    const std::vector<Pair> pairs{
        {"A026136", "A026172", "permutation", gen::permutation},
        {"A026137", "A026173", "inverse permutation", gen::inverse},
        {"A026138", "A026174", "positions of records", gen::record_positions},
        {"A026139", "A026175", "records", gen::record_values},
        {"A026141", "A026176", "half the record gaps", gen::half_record_gaps},
        {"A026182", "A026206", "(s(n)+1)/2, s = odd entries",
         [](RulePreset p, std::size_t c) { return gen::residue_class(p, 2, 1, 1, 2, c); }},
        {"A026184", "A026208", "s(n)/2, s = even entries",
         [](RulePreset p, std::size_t c) { return gen::residue_class(p, 2, 0, 0, 2, c); }},
        {"A026186", "A026210", "(s(n)+2)/3, s = entries = 1 mod 3",
         [](RulePreset p, std::size_t c) { return gen::residue_class(p, 3, 1, 2, 3, c); }},
        {"A026188", "A026212", "(s(n)+1)/3, s = entries = 2 mod 3",
         [](RulePreset p, std::size_t c) { return gen::residue_class(p, 3, 2, 1, 3, c); }},
    };
    for (const auto& pr : pairs) {
      auto g = pr.g;
      add(pr.std_id, std::string(pr.desc) + " of the standard rule", [g](std::size_t c) { return g(Rule36, c); });
      add(pr.even_id, std::string(pr.desc) + " of the right-if-even rule", [g](std::size_t c) { return g(RuleEven, c); });
    }
    add("A026140", "(records - 1)/2 of the standard rule", [](std::size_t c) { return gen::half_record_values(Rule36, c); });
    add("A026142", "permutation of rule 42", [](std::size_t c) { return gen::permutation(Rule42, c); });
    add("A026144", "positions of records of rule 42", [](std::size_t c) { return gen::record_positions(Rule42, c); });
    add("A026145", "records of rule 42", [](std::size_t c) { return gen::record_values(Rule42, c); });
    add("A026177", "permutation of the right-if-odd rule", [](std::size_t c) { return gen::permutation(RuleOdd, c); });
    add("A026179", "positions of records of the right-if-odd rule",
        [](std::size_t c) { return gen::record_positions(RuleOdd, c); });
    add("A026180", "records of the right-if-odd rule", [](std::size_t c) { return gen::record_values(RuleOdd, c); });
    add("A026215", "even entries of the right-if-odd rule", [](std::size_t c) { return gen::even_values(RuleOdd, c); });
    add("A026222", "n with equal entries under the standard rule and rule 42", gen::coincidences);
    add("A065190", "permutation of the unit-shift rule", [](std::size_t c) { return gen::permutation(UnitShift, c); });
    return t;
  }();
  return table;
}

inline const SequenceSource* find_source(const std::string& id) {
  const auto& r = registry();
  const auto it = r.find(normalize_id(id));
  return it == r.end() ? nullptr : &it->second;
}

/// The equalities between entries for the standard rule and their
/// right-if-even counterparts.
inline const std::vector<std::pair<std::string, std::string>>& even_rule_identities() {
  static const std::vector<std::pair<std::string, std::string>> pairs{
      {"A026136", "A026172"}, {"A026137", "A026173"}, {"A026138", "A026174"},
      {"A026139", "A026175"}, {"A026141", "A026176"}, {"A026184", "A026208"},
      {"A026188", "A026212"}, {"A026182", "A026206"}, {"A026186", "A026210"},
  };
  return pairs;
}

}  // namespace lrfill::oeis
