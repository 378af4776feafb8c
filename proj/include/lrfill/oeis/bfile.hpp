#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lrfill::oeis {

class BFileError : public std::runtime_error {
 public:
  BFileError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// "A" followed by six digits.
inline bool valid_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (char c : id.substr(1))
    if (c < '0' || c > '9') return false;
  return true;
}

inline std::string normalize_id(std::string_view id) {
  std::string s(id);
  if (!s.empty() && (s[0] == 'a')) s[0] = 'A';
  if (!s.empty() && s[0] != 'A') s = "A" + s;
  while (s.size() < 7) s.insert(1, "0");
  if (!valid_id(s)) throw std::invalid_argument("not an OEIS identifier: " + std::string(id));
  return s;
}

struct BFile {
  std::string id;  // may be empty for inline data
  std::vector<std::pair<std::int64_t, std::int64_t>> entries;  // strictly increasing index
  std::string source;

  [[nodiscard]] bool empty() const noexcept { return entries.empty(); }
  [[nodiscard]] std::int64_t first_index() const { return entries.at(0).first; }
  [[nodiscard]] std::int64_t last_index() const { return entries.at(entries.size() - 1).first; }

  /// Value at index i, if present.
  [[nodiscard]] std::optional<std::int64_t> at(std::int64_t i) const {
    if (entries.empty() || i < first_index() || i > last_index()) return std::nullopt;
    // contiguous files are the common case
    const auto guess = static_cast<std::size_t>(i - first_index());
    if (guess < entries.size() && entries[guess].first == i) return entries[guess].second;
    for (const auto& [k, v] : entries)
      if (k == i) return v;
    return std::nullopt;
  }

  friend bool operator==(const BFile& a, const BFile& b) { return a.id == b.id && a.entries == b.entries; }
};

namespace detail {
inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::optional<std::int64_t> parse_int(std::string_view tok) {
  if (!tok.empty() && tok[0] == '+') tok.remove_prefix(1);
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}
}  // namespace detail

/// Parses "index value" lines; blank lines and lines starting with '#' are skipped.
inline BFile parse_bfile(std::string_view text, std::string id = {}, std::string source = "inline") {
  BFile b{std::move(id), {}, std::move(source)};
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;

    const auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) throw BFileError(line_no, "expected 'index value', got '" + std::string(line) + "'");
    const auto lhs = line.substr(0, gap);
    const auto rhs = detail::trim(line.substr(gap));
    if (rhs.find_first_of(" \t") != std::string_view::npos)
      throw BFileError(line_no, "expected two fields, got '" + std::string(line) + "'");
    const auto index = detail::parse_int(lhs);
    const auto value = detail::parse_int(rhs);
    if (!index) throw BFileError(line_no, "bad index '" + std::string(lhs) + "'");
    if (!value) throw BFileError(line_no, "bad value '" + std::string(rhs) + "'");
    if (!b.entries.empty() && *index <= b.entries.back().first) {
      if (*index == b.entries.back().first) throw BFileError(line_no, "duplicate index " + std::to_string(*index));
      throw BFileError(line_no, "index " + std::to_string(*index) + " is not increasing");
    }
    b.entries.emplace_back(*index, *value);
  }
  return b;
}

inline std::string serialize(const BFile& b) {
  std::string out;
  if (!b.id.empty()) out += "# " + b.id + "\n";
  for (const auto& [i, v] : b.entries) out += std::to_string(i) + ' ' + std::to_string(v) + '\n';
  return out;
}

/// BFile from a generated sequence whose first term has index `offset`.
inline BFile from_sequence(const std::vector<std::int64_t>& values, std::int64_t offset, std::string id = {}) {
  BFile b{std::move(id), {}, "generated"};
  b.entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) b.entries.emplace_back(offset + static_cast<std::int64_t>(i), values[i]);
  return b;
}

enum class DiffStatus { Identical, FirstMismatch, RangeLimited };

struct DiffReport {
  std::string lhs_id;
  std::string rhs_id;
  std::int64_t from = 0;  // compared index range [from, to]
  std::int64_t to = 0;
  std::size_t compared = 0;
  DiffStatus status = DiffStatus::Identical;
  std::optional<std::int64_t> index;  // set for FirstMismatch
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::string note;  // RangeLimited: why fewer terms were compared than requested

  [[nodiscard]] bool agrees() const noexcept { return status != DiffStatus::FirstMismatch; }
};

inline const char* status_name(DiffStatus s) {
  switch (s) {
    case DiffStatus::Identical:
      return "identical";
    case DiffStatus::FirstMismatch:
      return "first-mismatch";
    case DiffStatus::RangeLimited:
      return "range-limited";
  }
  return "?";
}

/// Compares two b-files on their common indices, at most `limit` of them
/// (0 = all). RangeLimited means every compared index agrees but the overlap
/// held fewer than `limit` indices.
inline DiffReport compare_bfiles(const BFile& lhs, const BFile& rhs, std::size_t limit = 0) {
  DiffReport d;
  d.lhs_id = lhs.id;
  d.rhs_id = rhs.id;
  std::size_t i = 0, j = 0;
  while (i < lhs.entries.size() && j < rhs.entries.size() && (limit == 0 || d.compared < limit)) {
    const auto [li, lv] = lhs.entries[i];
    const auto [ri, rv] = rhs.entries[j];
    if (li < ri) {
      ++i;
      continue;
    }
    if (ri < li) {
      ++j;
      continue;
    }
    if (d.compared == 0) d.from = li;
    d.to = li;
    ++d.compared;
    if (lv != rv) {
      d.status = DiffStatus::FirstMismatch;
      d.index = li;
      d.lhs = lv;
      d.rhs = rv;
      return d;
    }
    ++i;
    ++j;
  }
  if (d.compared == 0) throw std::invalid_argument("no common indices between " + lhs.id + " and " + rhs.id);
  if (limit != 0 && d.compared < limit) {
    d.status = DiffStatus::RangeLimited;
    d.note = "overlap holds " + std::to_string(d.compared) + " of " + std::to_string(limit) + " requested terms";
  }
  return d;
}

/// Generated values (first index `offset`) against a b-file.
inline DiffReport compare(const std::vector<std::int64_t>& generated, std::int64_t offset, const BFile& b,
                          std::size_t limit) {
  auto d = compare_bfiles(from_sequence(generated, offset, "generated"), b, limit);
  return d;
}

inline std::string format_diff(const DiffReport& d) {
  std::string out = d.lhs_id + " vs " + d.rhs_id + ": " + status_name(d.status) + " over " + std::to_string(d.from) +
                    ".." + std::to_string(d.to) + " (" + std::to_string(d.compared) + " terms)";
  if (d.index)
    out += ", first mismatch at " + std::to_string(*d.index) + ": " + std::to_string(d.lhs) + " vs " + std::to_string(d.rhs);
  if (!d.note.empty()) out += ", " + d.note;
  return out;
}

}  // namespace lrfill::oeis
