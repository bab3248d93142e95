#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace ogp {

// Shortest round-trip decimal form. Every numeric cell written to CSV goes
// through here so output files are byte-stable across worker counts and
// repeated runs.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace ogp
