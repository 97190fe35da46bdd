#ifndef SPINFRAMES_FORMAT_HPP
#define SPINFRAMES_FORMAT_HPP

#include <charconv>
#include <string>

namespace spinframes {

/// Shortest decimal representation that round-trips the double exactly
/// (at most 17 significant digits). Keeps every emitted file byte-stable
/// across runs.
inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace spinframes

#endif
