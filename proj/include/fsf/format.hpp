#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace fsf {

/// Shortest fixed formatting that round-trips a double: 17 significant digits.
inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Shortest decimal string that parses back to exactly v; transcribed table
/// values render with their original digit count.
inline std::string shortest(double v) {
  char buf[40];
  for (int p = 1; p < 17; ++p) {
    std::snprintf(buf, sizeof buf, "%.*g", p, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return g17(v);
}

}  // namespace fsf
