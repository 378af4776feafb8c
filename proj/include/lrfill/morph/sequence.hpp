#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lrfill/morph/morphism.hpp"

namespace lrfill::morph {

/// A 1-indexed symbol sequence whose prefix is materialised on demand.
/// Sources: the fixed point of a morphism, an explicit finite word, a coding
/// of another sequence, or a shift T^k of another sequence. Entries never
/// change once produced. Extension is serialised by a per-sequence mutex.
class SymbolSequence {
 public:
  static SymbolSequence fixed_point(Morphism m, Symbol seed) {
    const Word& img = m.image(seed);
    if (img.front() != seed || img.size() < 2)
      throw MorphismError("not a fixed point seed: image of " + m.names()(seed) + " is " + m.format_word(img));
    auto node = std::make_shared<Node>();
    node->kind = Kind::FixedPoint;
    node->cache = img;
    node->expanded = 1;
    node->morphism = std::move(m);
    return SymbolSequence(std::move(node));
  }

  static SymbolSequence from_word(Word w) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Explicit;
    node->cache = std::move(w);
    return SymbolSequence(std::move(node));
  }

  [[nodiscard]] SymbolSequence coded(Coding c) const {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Coded;
    node->inner = node_;
    node->coding = std::move(c);
    return SymbolSequence(std::move(node));
  }

  /// T^k: entry n of the result is entry n+k of this sequence.
  [[nodiscard]] SymbolSequence shifted(std::size_t k) const {
    if (k == 0) return *this;
    auto node = std::make_shared<Node>();
    node->kind = Kind::Shift;
    node->inner = node_;
    node->shift = k;
    return SymbolSequence(std::move(node));
  }

  /// Length for explicit words (and sequences derived from them).
  [[nodiscard]] std::optional<std::size_t> length() const { return node_->length(); }

  /// Entry n (1-indexed).
  [[nodiscard]] Symbol at(std::size_t n) const {
    if (n == 0) throw std::out_of_range("sequences are 1-indexed");
    std::lock_guard lock(node_->mutex);
    node_->ensure(n);
    return node_->cache[n - 1];
  }

  /// Copy of entries 1..n.
  [[nodiscard]] Word take(std::size_t n) const {
    std::lock_guard lock(node_->mutex);
    node_->ensure(n);
    return Word(node_->cache.begin(), node_->cache.begin() + static_cast<std::ptrdiff_t>(n));
  }

  /// Generating morphism when this is a fixed point.
  [[nodiscard]] const Morphism* generator() const noexcept {
    return node_->kind == Kind::FixedPoint ? &node_->morphism : nullptr;
  }

 private:
  enum class Kind { FixedPoint, Explicit, Coded, Shift };

  struct Node {
    Kind kind{};
    std::mutex mutex;
    Word cache;
    // fixed point
    Morphism morphism;
    std::size_t expanded = 0;  // symbols whose images have been appended
    // derived
    std::shared_ptr<Node> inner;
    Coding coding;
    std::size_t shift = 0;

    std::optional<std::size_t> length() const {
      switch (kind) {
        case Kind::FixedPoint:
          return std::nullopt;
        case Kind::Explicit:
          return cache.size();
        case Kind::Coded:
          return inner->length();
        case Kind::Shift: {
          const auto len = inner->length();
          if (!len) return std::nullopt;
          return *len > shift ? *len - shift : 0;
        }
      }
      return std::nullopt;
    }

    void ensure(std::size_t n) {
      if (cache.size() >= n) return;
      switch (kind) {
        case Kind::FixedPoint:
          if (cache.capacity() < n) cache.reserve(std::max(n, 2 * cache.size()) + morphism.max_image_length());
          while (cache.size() < n) {
            const Word& img = morphism.image(cache[expanded++]);
            cache.insert(cache.end(), img.begin(), img.end());
          }
          return;
        case Kind::Explicit:
          throw std::out_of_range("finite sequence of length " + std::to_string(cache.size()) + " has no entry " +
                                  std::to_string(n));
        case Kind::Coded: {
          std::lock_guard lock(inner->mutex);
          inner->ensure(n);
          for (std::size_t i = cache.size(); i < n; ++i) cache.push_back(coding(inner->cache[i]));
          return;
        }
        case Kind::Shift: {
          std::lock_guard lock(inner->mutex);
          inner->ensure(n + shift);
          cache.insert(cache.end(), inner->cache.begin() + static_cast<std::ptrdiff_t>(cache.size() + shift),
                       inner->cache.begin() + static_cast<std::ptrdiff_t>(n + shift));
          return;
        }
      }
    }
  };

  explicit SymbolSequence(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  std::shared_ptr<Node> node_;
};

inline SymbolSequence fixed_point(const Morphism& m, Symbol seed) { return SymbolSequence::fixed_point(m, seed); }
inline SymbolSequence shift(const SymbolSequence& seq, std::size_t k) { return seq.shifted(k); }

}  // namespace lrfill::morph
