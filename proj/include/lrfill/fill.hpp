#pragma once

// Left-right filling procedure: Π(1)=1, then for n >= 2 the value n goes to
// position n - L(n) if that cell is still empty, otherwise to n + R(n).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lrfill {

using Value = std::uint64_t;
using Position = std::uint64_t;

inline constexpr Value kUndefined = std::numeric_limits<Value>::max();
inline constexpr std::uint64_t kMaxIndex = std::numeric_limits<std::int64_t>::max();

/// Raised when the procedure cannot continue (right collision, index overflow,
/// or a left probe outside a truncated store).
class FillFault : public std::runtime_error {
 public:
  FillFault(std::uint64_t step, const std::string& what)
      : std::runtime_error("fill fault at step " + std::to_string(step) + ": " + what), step_(step) {}
  [[nodiscard]] std::uint64_t step() const noexcept { return step_; }

 private:
  std::uint64_t step_;
};

enum class TiePolicy {
  LeftFirst,    // left when free
  RightIfEven,  // even n always goes right
  RightIfOdd,   // odd n always goes right
};

using OffsetFn = std::function<std::uint64_t(std::uint64_t)>;

struct FillingRule {
  OffsetFn left;
  OffsetFn right;
  TiePolicy tie = TiePolicy::LeftFirst;
  std::string name;
};

enum class RulePreset { Rule36, RuleEven, RuleOdd, Rule42, UnitShift, Degenerate };

inline FillingRule rule(RulePreset preset) {
  const OffsetFn half = [](std::uint64_t n) { return n / 2; };
  const OffsetFn half_up = [](std::uint64_t n) { return (n + 1) / 2; };
  switch (preset) {
    case RulePreset::Rule36:
      return {half, half, TiePolicy::LeftFirst, "36"};
    case RulePreset::RuleEven:
      return {half, half, TiePolicy::RightIfEven, "even"};
    case RulePreset::RuleOdd:
      return {half, half, TiePolicy::RightIfOdd, "odd"};
    case RulePreset::Rule42:
      return {half_up, half_up, TiePolicy::LeftFirst, "42"};
    case RulePreset::UnitShift: {
      const OffsetFn one = [](std::uint64_t) { return std::uint64_t{1}; };
      return {one, one, TiePolicy::LeftFirst, "unit"};
    }
    case RulePreset::Degenerate: {
      const OffsetFn pred = [](std::uint64_t n) { return n - 1; };
      return {pred, pred, TiePolicy::LeftFirst, "degenerate"};
    }
  }
  throw std::invalid_argument("unknown rule preset");
}

inline std::string preset_name(RulePreset preset) { return rule(preset).name; }

inline std::optional<RulePreset> parse_preset(const std::string& text) {
  if (text == "36" || text == "standard") return RulePreset::Rule36;
  if (text == "even") return RulePreset::RuleEven;
  if (text == "odd") return RulePreset::RuleOdd;
  if (text == "42") return RulePreset::Rule42;
  if (text == "unit" || text == "unitshift") return RulePreset::UnitShift;
  if (text == "degenerate") return RulePreset::Degenerate;
  return std::nullopt;
}

/// A 1-indexed, possibly partial permutation. Immutable once produced by the
/// procedure; safe to share read-only.
class PartialPermutation {
 public:
  PartialPermutation() : values_{kUndefined, 1}, inverse_{0, 1} {}

  /// Number of stored positions (the largest position ever written, or the
  /// truncation capacity).
  [[nodiscard]] Position size() const noexcept { return values_.size() - 1; }
  [[nodiscard]] std::uint64_t steps_run() const noexcept { return steps_; }

  [[nodiscard]] bool defined(Position n) const noexcept {
    return n >= 1 && n < values_.size() && values_[n] != kUndefined;
  }

  [[nodiscard]] std::optional<Value> at(Position n) const noexcept {
    if (!defined(n)) return std::nullopt;
    return values_[n];
  }

  /// Unchecked read; kUndefined when the cell is empty. n must be in 1..size().
  [[nodiscard]] Value operator[](Position n) const noexcept { return values_[n]; }

  /// Position holding `v`, when inverse tracking was enabled and v was assigned.
  [[nodiscard]] std::optional<Position> position_of(Value v) const {
    if (!tracks_inverse_) throw std::logic_error("inverse was not tracked for this permutation");
    if (v == 0 || v >= inverse_.size() || inverse_[v] == 0) return std::nullopt;
    return inverse_[v];
  }
  [[nodiscard]] bool tracks_inverse() const noexcept { return tracks_inverse_; }

  /// Largest m such that positions 1..m are all defined.
  [[nodiscard]] Position defined_prefix_length() const noexcept { return defined_prefix_; }

  /// Raw storage; index 0 is unused.
  [[nodiscard]] std::span<const Value> raw() const noexcept { return values_; }

  /// Number of right writes dropped because they fell past a truncation capacity.
  [[nodiscard]] std::uint64_t discarded_writes() const noexcept { return discarded_; }

  friend bool operator==(const PartialPermutation& a, const PartialPermutation& b) {
    return a.values_ == b.values_;
  }

 private:
  friend class FillingProcedure;

  std::vector<Value> values_;
  std::vector<Position> inverse_;
  std::uint64_t steps_ = 1;
  Position defined_prefix_ = 1;
  std::uint64_t discarded_ = 0;
  bool tracks_inverse_ = true;
};

struct FillOptions {
  /// When set, only positions 1..capacity are stored and right writes past it
  /// are dropped. Results on 1..capacity stay exact as long as every left
  /// probe n - L(n) stays within capacity; a probe beyond it raises FillFault.
  std::optional<Position> capacity;
  bool track_inverse = true;
};

/// Stepwise driver for the procedure. step 1 is the initialisation Π(1)=1.
class FillingProcedure {
 public:
  explicit FillingProcedure(FillingRule rule, FillOptions options = {})
      : rule_(std::move(rule)), options_(options) {
    if (!rule_.left || !rule_.right) throw std::invalid_argument("filling rule needs both offsets");
    perm_.tracks_inverse_ = options_.track_inverse;
    if (!options_.track_inverse) perm_.inverse_.clear();
    if (options_.capacity) {
      if (*options_.capacity < 1) throw std::invalid_argument("capacity must be >= 1");
      perm_.values_.assign(*options_.capacity + 1, kUndefined);
      perm_.values_[1] = 1;
    }
  }

  [[nodiscard]] std::uint64_t steps_run() const noexcept { return perm_.steps_; }
  [[nodiscard]] const PartialPermutation& current() const noexcept { return perm_; }

  void step() {
    const std::uint64_t n = perm_.steps_ + 1;
    const std::uint64_t l = rule_.left(n);
    const std::uint64_t r = rule_.right(n);
    if (r > kMaxIndex - n) throw FillFault(n, "right target overflows 2^63-1");

    const bool forced_right = (rule_.tie == TiePolicy::RightIfEven && n % 2 == 0) ||
                              (rule_.tie == TiePolicy::RightIfOdd && n % 2 == 1);
    bool go_left = false;
    if (!forced_right && l < n) {
      const Position target = n - l;
      if (options_.capacity && target > *options_.capacity)
        throw FillFault(n, "left probe " + std::to_string(target) + " beyond capacity");
      go_left = !perm_.defined(target);
    }
    assign(go_left ? n - l : n + r, n);
    perm_.steps_ = n;
  }

  void run_to(std::uint64_t steps) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    const std::size_t hint = static_cast<std::size_t>(steps) * 3 / 2 + 2;
    auto grow = [](auto& v, std::size_t need) {
      if (v.capacity() < need) v.reserve(std::max(need, 2 * v.capacity()));
    };
    if (!options_.capacity) grow(perm_.values_, hint);
    if (options_.track_inverse) grow(perm_.inverse_, steps + 1);
    while (perm_.steps_ < steps) step();
  }

  /// Runs until positions 1..n are defined or `max_steps` is reached.
  void run_until_defined(Position n, std::uint64_t max_steps) {
    while (perm_.defined_prefix_ < n && perm_.steps_ < max_steps) step();
  }

  [[nodiscard]] PartialPermutation take() && { return std::move(perm_); }

 private:
  void assign(Position pos, Value v) {
    auto& values = perm_.values_;
    if (pos >= values.size()) {
      if (options_.capacity) {
        ++perm_.discarded_;
        return;
      }
      values.resize(pos + 1, kUndefined);
    }
    if (values[pos] != kUndefined)
      throw FillFault(v, "position " + std::to_string(pos) + " already holds " + std::to_string(values[pos]));
    values[pos] = v;
    if (options_.track_inverse) {
      if (v >= perm_.inverse_.size()) perm_.inverse_.resize(v + 1, 0);
      perm_.inverse_[v] = pos;
    }
    while (perm_.defined_prefix_ + 1 < values.size() && values[perm_.defined_prefix_ + 1] != kUndefined)
      ++perm_.defined_prefix_;
  }

  FillingRule rule_;
  FillOptions options_;
  PartialPermutation perm_;
};

/// Runs exactly `steps` steps of the procedure.
inline PartialPermutation fill(const FillingRule& r, std::uint64_t steps, FillOptions options = {}) {
  FillingProcedure proc(r, options);
  proc.run_to(steps);
  return std::move(proc).take();
}

inline PartialPermutation fill(RulePreset preset, std::uint64_t steps, FillOptions options = {}) {
  return fill(rule(preset), steps, options);
}

/// Runs until positions 1..n are all defined, giving up after `max_steps`
/// (default 2n+1, enough for the built-in rules whose values never exceed 2n+1).
inline PartialPermutation fill_prefix(const FillingRule& r, Position n, std::optional<std::uint64_t> max_steps = {},
                                      FillOptions options = {}) {
  if (n < 1) throw std::invalid_argument("prefix length must be >= 1");
  FillingProcedure proc(r, options);
  proc.run_until_defined(n, max_steps.value_or(2 * n + 1));
  return std::move(proc).take();
}

inline PartialPermutation fill_prefix(RulePreset preset, Position n, std::optional<std::uint64_t> max_steps = {},
                                      FillOptions options = {}) {
  return fill_prefix(rule(preset), n, max_steps, options);
}

/// Positions 1..n; cells never written are std::nullopt.
inline std::vector<std::optional<Value>> read_prefix(const PartialPermutation& perm, Position n) {
  if (n < 1) throw std::invalid_argument("prefix length must be >= 1");
  std::vector<std::optional<Value>> out;
  out.reserve(n);
  for (Position i = 1; i <= n; ++i) out.push_back(perm.at(i));
  return out;
}

inline Position defined_prefix_length(const PartialPermutation& perm) { return perm.defined_prefix_length(); }

/// Values on positions 1..n; throws if any of them is undefined.
inline std::vector<Value> defined_values(const PartialPermutation& perm, Position n) {
  if (perm.defined_prefix_length() < n)
    throw std::out_of_range("positions 1.." + std::to_string(n) + " are not all defined (defined prefix " +
                            std::to_string(perm.defined_prefix_length()) + ")");
  const auto raw = perm.raw();
  return {raw.begin() + 1, raw.begin() + 1 + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace lrfill
