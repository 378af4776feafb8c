#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

namespace lrfill::analysis {

struct Counterexample {
  std::uint64_t n = 0;
  std::string expected;
  std::string got;
};

/// Outcome of one checked statement over a scan bound. Only the first
/// counterexample is kept.
struct Claim {
  std::string id;
  std::string statement;
  std::uint64_t bound = 0;
  bool pass = true;
  bool empirical = false;
  std::optional<Counterexample> counterexample;
  std::vector<std::pair<std::string, std::string>> details;

  Claim(std::string claim_id, std::string text, std::uint64_t scan_bound)
      : id(std::move(claim_id)), statement(std::move(text)), bound(scan_bound) {}

  /// Records a failure; returns false so scans can stop early.
  template <class E, class G>
  bool fail(std::uint64_t n, const E& expected, const G& got) {
    if (pass) {
      pass = false;
      counterexample = Counterexample{n, to_text(expected), to_text(got)};
    }
    return false;
  }

  /// Fails unless `ok`.
  template <class E, class G>
  bool expect(bool ok, std::uint64_t n, const E& expected, const G& got) {
    return ok || fail(n, expected, got);
  }

  template <class V>
  Claim& detail(std::string key, const V& value) {
    details.emplace_back(std::move(key), to_text(value));
    return *this;
  }

  template <class V>
  static std::string to_text(const V& v) {
    if constexpr (std::is_convertible_v<V, std::string>) {
      return std::string(v);
    } else {
      std::ostringstream os;
      os << v;
      return os.str();
    }
  }
};

struct Report {
  std::vector<Claim> claims;

  [[nodiscard]] bool pass() const {
    return std::ranges::all_of(claims, [](const Claim& c) { return c.pass; });
  }
  Claim& add(Claim c) { return claims.emplace_back(std::move(c)); }
  void append(const Report& other) { claims.insert(claims.end(), other.claims.begin(), other.claims.end()); }
  [[nodiscard]] const Claim* find(const std::string& id) const {
    const auto it = std::ranges::find(claims, id, &Claim::id);
    return it == claims.end() ? nullptr : &*it;
  }
};

inline std::string format_plain(const Report& r) {
  std::ostringstream os;
  for (const Claim& c : r.claims) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id << "  [n<=" << c.bound << "]";
    if (c.empirical) os << " EMPIRICAL";
    os << "  " << c.statement << '\n';
    if (c.counterexample)
      os << "     first counterexample: n=" << c.counterexample->n << " expected " << c.counterexample->expected
         << ", got " << c.counterexample->got << '\n';
    for (const auto& [k, v] : c.details) os << "     " << k << ": " << v << '\n';
  }
  return os.str();
}

namespace detail {
inline std::string kv_value(const std::string& v) {
  if (!v.empty() && v.find_first_of(" \t\"=") == std::string::npos) return v;
  std::string out = "\"";
  for (char ch : v) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}
}  // namespace detail

/// One key=value record per claim.
inline std::string format_structured(const Report& r) {
  std::ostringstream os;
  for (const Claim& c : r.claims) {
    os << "claim=" << c.id << " bound=" << c.bound << " status=" << (c.pass ? "pass" : "fail")
       << " empirical=" << (c.empirical ? "true" : "false");
    if (c.counterexample)
      os << " cx.n=" << c.counterexample->n << " cx.expected=" << detail::kv_value(c.counterexample->expected)
         << " cx.got=" << detail::kv_value(c.counterexample->got);
    for (const auto& [k, v] : c.details) os << ' ' << k << '=' << detail::kv_value(v);
    os << '\n';
  }
  return os.str();
}

}  // namespace lrfill::analysis
