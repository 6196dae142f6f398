#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "patlock/errors.hpp"
#include "patlock/grid.hpp"

namespace patlock {

inline constexpr int kMinPatternLength = 4;

// An ordered traversal of contact points on a grid. Construction does not
// enforce the drawing rules; call validate() for that.
class Pattern {
 public:
  Pattern() = default;
  Pattern(std::vector<std::uint8_t> points, GridSpec grid = {})
      : points_(std::move(points)), grid_(grid) {
    for (std::uint8_t p : points_)
      if (!grid_.in_range(p))
        raise(errc::index_out_of_range, "point " + std::to_string(int(p)) +
                                            " outside " + std::to_string(grid_.rows) +
                                            "x" + std::to_string(grid_.cols) + " grid");
  }
  Pattern(std::initializer_list<int> points, GridSpec grid = {})
      : Pattern(std::vector<std::uint8_t>(points.begin(), points.end()), grid) {}

  const std::vector<std::uint8_t>& points() const { return points_; }
  const GridSpec& grid() const { return grid_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return points_[i]; }
  std::uint8_t front() const { return points_.front(); }
  std::uint8_t back() const { return points_.back(); }

  Pattern reversed() const {
    std::vector<std::uint8_t> r(points_.rbegin(), points_.rend());
    return Pattern(std::move(r), grid_);
  }

  // Dash-separated decimal encoding, e.g. "0-1-2-4-6-7-8".
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (i) out += '-';
      out += std::to_string(int(points_[i]));
    }
    return out;
  }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.points_ == b.points_ && a.grid_ == b.grid_;
  }
  // Lexicographic by point sequence; the grid never differs within one study.
  friend bool operator<(const Pattern& a, const Pattern& b) {
    return a.points_ < b.points_;
  }

 private:
  std::vector<std::uint8_t> points_;
  GridSpec grid_{};
};

// A dataset is a multiset of patterns, kept as (pattern, multiplicity) rows.
using PatternCounts = std::vector<std::pair<Pattern, std::uint64_t>>;

inline std::uint64_t total_occurrences(const PatternCounts& data) {
  std::uint64_t n = 0;
  for (const auto& [p, c] : data) n += c;
  return n;
}

// Parses the dash-separated decimal form. Only the token grammar and index
// range are checked here; drawing rules are validate()'s job.
inline Pattern parse_pattern(std::string_view text, GridSpec grid = {}) {
  if (text.empty()) raise(errc::malformed_token, "empty pattern text");
  std::vector<std::uint8_t> pts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t dash = std::min(text.find('-', pos), text.size());
    const std::string_view tok = text.substr(pos, dash - pos);
    int value = -1;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size() || tok.empty())
      raise(errc::malformed_token, "bad token '" + std::string(tok) + "' in '" +
                                       std::string(text) + "'");
    if (!grid.in_range(value))
      raise(errc::index_out_of_range, "point " + std::string(tok) + " exceeds max index " +
                                          std::to_string(grid.points() - 1));
    pts.push_back(static_cast<std::uint8_t>(value));
    pos = dash + 1;
    if (dash == text.size()) break;
  }
  return Pattern(std::move(pts), grid);
}

enum class rule_violation {
  too_short,
  repeated_point,
  skipped_unvisited_point,
  index_out_of_range,
};

inline std::string_view to_string(rule_violation v) {
  switch (v) {
    case rule_violation::too_short: return "TooShort";
    case rule_violation::repeated_point: return "RepeatedPoint";
    case rule_violation::skipped_unvisited_point: return "SkippedUnvisitedPoint";
    case rule_violation::index_out_of_range: return "IndexOutOfRange";
  }
  return "?";
}

struct ValidityReport {
  bool valid = false;
  std::vector<rule_violation> violations;
};

// Checks the drawing rules: at least four points, no repeats, and no step
// may jump a lattice point that has not been visited yet. The jump check is
// order sensitive: a point already traced can be passed over freely.
inline ValidityReport validate(const Pattern& pattern) {
  const GridSpec& grid = pattern.grid();
  ValidityReport report;
  auto flag = [&](rule_violation v) {
    if (std::find(report.violations.begin(), report.violations.end(), v) ==
        report.violations.end())
      report.violations.push_back(v);
  };

  if (pattern.size() < std::size_t(kMinPatternLength)) flag(rule_violation::too_short);

  std::vector<bool> visited(grid.points(), false);
  bool range_ok = true;
  for (std::uint8_t p : pattern.points())
    if (!grid.in_range(p)) {
      flag(rule_violation::index_out_of_range);
      range_ok = false;
    }

  if (range_ok) {
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      const int p = pattern[i];
      if (visited[p]) flag(rule_violation::repeated_point);
      if (i > 0 && p != pattern[i - 1]) {
        for (int mid : intermediate_points(pattern[i - 1], p, grid))
          if (!visited[mid]) flag(rule_violation::skipped_unvisited_point);
      }
      visited[p] = true;
    }
  }

  report.valid = report.violations.empty();
  return report;
}

inline bool is_valid(const Pattern& pattern) { return validate(pattern).valid; }

inline void require_valid(const Pattern& pattern) {
  const ValidityReport r = validate(pattern);
  if (!r.valid) {
    std::string why;
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
      if (i) why += ", ";
      why += to_string(r.violations[i]);
    }
    raise(errc::pattern_invalid, "pattern " + pattern.str() + " violates " + why);
  }
}

using Trigram = std::array<std::uint8_t, 3>;

// Consecutive three-point windows, in traversal order.
inline std::vector<Trigram> trigrams(const Pattern& pattern) {
  if (pattern.size() < 3)
    raise(errc::too_short, "pattern " + pattern.str() + " has fewer than 3 points");
  std::vector<Trigram> out;
  out.reserve(pattern.size() - 2);
  for (std::size_t i = 0; i + 2 < pattern.size(); ++i)
    out.push_back({pattern[i], pattern[i + 1], pattern[i + 2]});
  return out;
}

inline Pattern apply_symmetry(const Pattern& pattern, int sym) {
  std::vector<std::uint8_t> pts;
  pts.reserve(pattern.size());
  for (std::uint8_t p : pattern.points())
    pts.push_back(static_cast<std::uint8_t>(transform_point(p, sym, pattern.grid())));
  return Pattern(std::move(pts), pattern.grid());
}

}  // namespace patlock
