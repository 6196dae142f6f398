#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace patlock::detail {

// Shortest round-trip decimal form, locale independent.
inline std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string fmt_fixed(double v, int digits) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return std::string(buf, buf + n);
}

}  // namespace patlock::detail
