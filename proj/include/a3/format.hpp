#pragma once

#include <charconv>
#include <complex>
#include <string>

namespace a3 {

// Shortest decimal form that round-trips to the same double.  Used for all
// text output (expression printing, CSV) so that files re-parse exactly.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace a3
