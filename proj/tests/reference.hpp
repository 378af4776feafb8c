#pragma once

// Slow, direct reference implementations used as test oracles. They share no
// code with the library.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace ref {

using u64 = std::uint64_t;

/// Filling with a std::map store; force_right(n) sends n right unconditionally.
inline std::map<u64, u64> fill(std::function<u64(u64)> left, std::function<u64(u64)> right, u64 steps,
                               std::function<bool(u64)> force_right = {}) {
  std::map<u64, u64> at{{1, 1}};
  for (u64 n = 2; n <= steps; ++n) {
    const bool forced = force_right && force_right(n);
    const u64 l = left(n);
    if (!forced && l < n && !at.contains(n - l)) {
      at[n - l] = n;
    } else {
      at.emplace(n + right(n), n);
    }
  }
  return at;
}

inline std::vector<u64> prefix(const std::map<u64, u64>& at, u64 count) {
  std::vector<u64> out;
  for (u64 i = 1; i <= count; ++i) out.push_back(at.at(i));
  return out;
}

inline u64 half(u64 n) { return n / 2; }
inline u64 half_up(u64 n) { return (n + 1) / 2; }

inline std::vector<u64> standard(u64 count) { return prefix(fill(half, half, 2 * count + 2), count); }
inline std::vector<u64> odd_rule(u64 count) {
  return prefix(fill(half, half, 2 * count + 2, [](u64 n) { return n % 2 == 1; }), count);
}
inline std::vector<u64> even_rule(u64 count) {
  return prefix(fill(half, half, 2 * count + 2, [](u64 n) { return n % 2 == 0; }), count);
}
inline std::vector<u64> rule42(u64 count) { return prefix(fill(half_up, half_up, 2 * count + 2), count); }

/// Fixed point of a substitution on characters, by iterating from the seed.
inline std::string fixed_point(const std::map<char, std::string>& m, char seed, std::size_t n) {
  std::string w(1, seed);
  while (w.size() < n) {
    std::string next;
    for (char c : w) next += m.at(c);
    if (next.size() <= w.size()) break;
    w = next;
  }
  return w.substr(0, n);
}

inline std::string digits(const std::vector<unsigned>& w) {
  std::string s;
  for (unsigned x : w) s += static_cast<char>('0' + x);
  return s;
}

template <class T>
std::vector<T> deltas(const std::vector<T>& v) {
  std::vector<T> out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(v[i + 1] - v[i]);
  return out;
}

/// Random substitution on {1..k} with images of length 1..max_len whose
/// image of 1 starts with 1 and has length >= 2 (so 1 is prolongable).
inline std::map<unsigned, std::vector<unsigned>> random_substitution(std::mt19937& rng, unsigned k, unsigned max_len) {
  std::uniform_int_distribution<unsigned> letter(1, k), len(1, max_len), len2(2, max_len);
  std::map<unsigned, std::vector<unsigned>> m;
  for (unsigned a = 1; a <= k; ++a) {
    const unsigned l = a == 1 ? len2(rng) : len(rng);
    std::vector<unsigned> img;
    for (unsigned i = 0; i < l; ++i) img.push_back(i == 0 && a == 1 ? 1 : letter(rng));
    m[a] = img;
  }
  return m;
}

}  // namespace ref
