#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patlock/errors.hpp"
#include "patlock/grid.hpp"
#include "patlock/pattern.hpp"

namespace patlock {

namespace detail {
// Packs a point sequence into a base-(P+1) integer, digits offset by one so
// that sequence length is implied. Used only as a lookup key.
using pattern_code_t = unsigned __int128;

inline pattern_code_t pattern_code(std::span<const std::uint8_t> points, int grid_points) {
  pattern_code_t code = 0;
  const pattern_code_t base = grid_points + 1;
  for (std::uint8_t p : points) code = code * base + (p + 1);
  return code;
}
}  // namespace detail

// The complete set of valid patterns on a grid within a length range, in
// lexicographic order of the point sequence (prefixes first). Immutable
// after construction; safe for concurrent reads.
class PatternUniverse {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  std::size_t size() const { return offsets_.size() - 1; }
  const GridSpec& grid() const { return grid_; }
  int min_len() const { return min_len_; }
  int max_len() const { return max_len_; }

  std::span<const std::uint8_t> points(std::uint32_t ordinal) const {
    return {flat_.data() + offsets_[ordinal], offsets_[ordinal + 1] - offsets_[ordinal]};
  }

  Pattern pattern(std::uint32_t ordinal) const {
    const auto view = points(ordinal);
    return Pattern(std::vector<std::uint8_t>(view.begin(), view.end()), grid_);
  }

  std::optional<std::uint32_t> ordinal(const Pattern& p) const {
    return ordinal(std::span<const std::uint8_t>(p.points()));
  }

  std::optional<std::uint32_t> ordinal(std::span<const std::uint8_t> pts) const {
    const auto code = detail::pattern_code(pts, grid_.points());
    const auto it = std::lower_bound(
        code_index_.begin(), code_index_.end(), code,
        [](const auto& entry, detail::pattern_code_t c) { return entry.first < c; });
    if (it == code_index_.end() || it->first != code) return std::nullopt;
    return it->second;
  }

  bool contains(const Pattern& p) const { return ordinal(p).has_value(); }

 private:
  friend PatternUniverse enumerate_universe(GridSpec, int, int, std::uint64_t);

  GridSpec grid_{};
  int min_len_ = 0;
  int max_len_ = 0;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<std::uint8_t> flat_;
  std::vector<std::pair<detail::pattern_code_t, std::uint32_t>> code_index_;
};

// Depth-first generation of every sequence passing validate(), emitted in
// lexicographic order so ordinals are stable across runs. The limit guards
// against accidentally enumerating an astronomically large grid.
inline PatternUniverse enumerate_universe(GridSpec grid = {}, int min_len = kMinPatternLength,
                                          int max_len = -1,
                                          std::uint64_t limit = PatternUniverse::kDefaultLimit) {
  check_grid(grid);
  const int P = grid.points();
  if (max_len < 0) max_len = P;
  if (min_len < kMinPatternLength || min_len > max_len || max_len > P)
    raise(errc::invalid_argument,
          "length bounds must satisfy 4 <= min <= max <= " + std::to_string(P));

  // Intermediate lattice points per directed step, precomputed once.
  std::vector<std::vector<int>> between(P * P);
  for (int a = 0; a < P; ++a)
    for (int b = 0; b < P; ++b)
      if (a != b) between[a * P + b] = intermediate_points(a, b, grid);

  PatternUniverse uni;
  uni.grid_ = grid;
  uni.min_len_ = min_len;
  uni.max_len_ = max_len;

  std::vector<std::uint8_t> seq;
  std::vector<bool> visited(P, false);

  auto emit = [&] {
    if (uni.size() >= limit)
      raise(errc::capacity_exceeded,
            "universe exceeds limit of " + std::to_string(limit) + " patterns");
    uni.flat_.insert(uni.flat_.end(), seq.begin(), seq.end());
    uni.offsets_.push_back(static_cast<std::uint32_t>(uni.flat_.size()));
  };

  auto step_legal = [&](int from, int to) {
    if (visited[to]) return false;
    for (int mid : between[from * P + to])
      if (!visited[mid]) return false;
    return true;
  };

  auto dfs = [&](auto&& self, int last) -> void {
    if (int(seq.size()) >= min_len) emit();
    if (int(seq.size()) == max_len) return;
    for (int next = 0; next < P; ++next) {
      if (!step_legal(last, next)) continue;
      visited[next] = true;
      seq.push_back(static_cast<std::uint8_t>(next));
      self(self, next);
      seq.pop_back();
      visited[next] = false;
    }
  };

  for (int start = 0; start < P; ++start) {
    visited[start] = true;
    seq.push_back(static_cast<std::uint8_t>(start));
    dfs(dfs, start);
    seq.pop_back();
    visited[start] = false;
  }

  uni.code_index_.reserve(uni.size());
  for (std::uint32_t i = 0; i < uni.size(); ++i)
    uni.code_index_.emplace_back(detail::pattern_code(uni.points(i), P), i);
  std::sort(uni.code_index_.begin(), uni.code_index_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return uni;
}

}  // namespace patlock
