#pragma once

#include <stdexcept>
#include <string>

namespace glat {

/// Raised when an operation's preconditions on user-supplied data fail
/// (dimension mismatches, out-of-range parameters, malformed input, ...).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Internal consistency check. Failures indicate a bug, not bad input.
#define GLAT_CHECK(cond, msg)                                          \
  do {                                                                 \
    if (!(cond)) throw std::logic_error(std::string("glat: ") + msg); \
  } while (0)

}  // namespace glat
