// SPDX-License-Identifier: Apache-2.0

#ifndef CPM_SEQUENCE_HPP
#define CPM_SEQUENCE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cpm {

using symbol_t = std::uint32_t;
using index_t = std::int64_t;

/// Immutable string over a dense integer alphabet [0, alphabet_size).
class Sequence {
public:
  Sequence() = default;

  Sequence(std::vector<symbol_t> symbols, symbol_t alphabet_size)
      : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    for (symbol_t s : symbols_) {
      if (s >= alphabet_size_) {
        throw std::domain_error("Sequence: symbol rank exceeds alphabet size");
      }
    }
  }

  /// Alphabet size is inferred as max symbol + 1.
  explicit Sequence(std::vector<symbol_t> symbols) : symbols_(std::move(symbols)) {
    symbol_t max_symbol = 0;
    for (symbol_t s : symbols_) max_symbol = std::max(max_symbol, s);
    alphabet_size_ = symbols_.empty() ? 0 : max_symbol + 1;
  }

  /// Bytes become symbols 0..255.
  static Sequence from_bytes(std::string_view bytes) {
    std::vector<symbol_t> symbols(bytes.size());
    std::transform(bytes.begin(), bytes.end(), symbols.begin(),
                   [](char c) { return static_cast<symbol_t>(static_cast<unsigned char>(c)); });
    return Sequence(std::move(symbols), 256);
  }

  [[nodiscard]] index_t size() const noexcept { return static_cast<index_t>(symbols_.size()); }
  [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
  [[nodiscard]] symbol_t alphabet_size() const noexcept { return alphabet_size_; }
  [[nodiscard]] symbol_t operator[](index_t i) const { return symbols_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] std::span<const symbol_t> view() const noexcept { return symbols_; }
  [[nodiscard]] std::span<const symbol_t> view(index_t start, index_t length) const {
    return std::span<const symbol_t>(symbols_).subspan(static_cast<std::size_t>(start),
                                                       static_cast<std::size_t>(length));
  }
  [[nodiscard]] auto begin() const noexcept { return symbols_.begin(); }
  [[nodiscard]] auto end() const noexcept { return symbols_.end(); }

  /// Inverse of from_bytes for symbols < 256; other symbols are rendered as '?'.
  [[nodiscard]] std::string to_string() const {
    std::string out(symbols_.size(), '?');
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i] < 256) out[i] = static_cast<char>(symbols_[i]);
    }
    return out;
  }

  friend bool operator==(const Sequence& a, const Sequence& b) noexcept {
    return a.symbols_ == b.symbols_;
  }

private:
  std::vector<symbol_t> symbols_;
  symbol_t alphabet_size_ = 0;
};

/// Split point x of a rotation: rot_x(S) = S[x..] S[..x).
class Rotation {
public:
  constexpr Rotation() = default;
  constexpr explicit Rotation(index_t x) : x_(x) {}
  [[nodiscard]] constexpr index_t value() const noexcept { return x_; }
  friend constexpr bool operator==(Rotation, Rotation) = default;
  friend constexpr auto operator<=>(Rotation, Rotation) = default;

private:
  index_t x_ = 0;
};

/// A reported k-occurrence; the witness fields are filled only on request.
struct Occurrence {
  index_t position = 0;
  std::optional<Rotation> rotation;
  std::optional<index_t> mismatches;

  /// Text position where P[0] lands: p + ((m - x) mod m).
  [[nodiscard]] index_t anchor(index_t m) const {
    if (!rotation) throw std::logic_error("Occurrence::anchor: no witness rotation");
    return position + (m - rotation->value()) % m;
  }

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Occurrences in ascending position order.
struct OccurrenceReport {
  std::vector<Occurrence> occurrences;

  [[nodiscard]] std::vector<index_t> positions() const {
    std::vector<index_t> out;
    out.reserve(occurrences.size());
    for (const auto& occ : occurrences) out.push_back(occ.position);
    return out;
  }
  [[nodiscard]] std::size_t size() const noexcept { return occurrences.size(); }
  [[nodiscard]] bool empty() const noexcept { return occurrences.empty(); }

  friend bool operator==(const OccurrenceReport&, const OccurrenceReport&) = default;
};

inline Sequence rotate(const Sequence& s, Rotation x) {
  const index_t m = s.size();
  if (x.value() < 0 || x.value() >= m) {
    throw std::domain_error("rotate: rotation out of range");
  }
  std::vector<symbol_t> out(s.begin(), s.end());
  std::rotate(out.begin(), out.begin() + x.value(), out.end());
  return Sequence(std::move(out), s.alphabet_size());
}

/// Exact Hamming distance if it is <= limit, std::nullopt otherwise.
inline std::optional<index_t> hamming_bounded(std::span<const symbol_t> a,
                                              std::span<const symbol_t> b, index_t limit) {
  if (a.size() != b.size()) throw std::domain_error("hamming_bounded: length mismatch");
  index_t distance = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i] && ++distance > limit) return std::nullopt;
  }
  return distance;
}

inline std::optional<index_t> hamming_bounded(const Sequence& a, const Sequence& b, index_t limit) {
  return hamming_bounded(a.view(), b.view(), limit);
}

/// M(p, x): every (text index, pattern index) aligned by rot_x(P) at p, by text index.
inline std::vector<std::pair<index_t, index_t>> matching_pairs(index_t p, Rotation x, index_t m) {
  if (m <= 0 || p < 0 || x.value() < 0 || x.value() >= m) {
    throw std::domain_error("matching_pairs: invalid position or rotation");
  }
  std::vector<std::pair<index_t, index_t>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (index_t i = p; i < p + m; ++i) pairs.emplace_back(i, (i - p + x.value()) % m);
  return pairs;
}

/// Reference solver: every position and rotation compared directly.
/// Witness is the rotation of minimum distance, smallest x on ties.
inline OccurrenceReport brute_force_cpm(const Sequence& text, const Sequence& pattern, index_t k) {
  const index_t n = text.size();
  const index_t m = pattern.size();
  if (m == 0) throw std::domain_error("brute_force_cpm: empty pattern");
  OccurrenceReport report;
  if (n < m || k < 0) return report;

  std::vector<symbol_t> doubled(pattern.begin(), pattern.end());
  doubled.insert(doubled.end(), pattern.begin(), pattern.end());
  const std::span<const symbol_t> square(doubled);

  for (index_t p = 0; p + m <= n; ++p) {
    const auto window = text.view(p, m);
    index_t best = k + 1;
    index_t best_x = -1;
    for (index_t x = 0; x < m && best > 0; ++x) {
      auto d = hamming_bounded(window, square.subspan(static_cast<std::size_t>(x),
                                                      static_cast<std::size_t>(m)),
                               best - 1);
      if (d) {
        best = *d;
        best_x = x;
      }
    }
    if (best_x >= 0) report.occurrences.push_back({p, Rotation(best_x), best});
  }
  return report;
}

}  // namespace cpm

#endif  // CPM_SEQUENCE_HPP
