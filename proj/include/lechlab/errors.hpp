#ifndef LECHLAB_ERRORS_HPP
#define LECHLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lechlab {

/// Bad user input: dimension mismatches, malformed grammar, violated
/// preconditions. CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured budget was exceeded (enumeration caps, elimination budgets,
/// non-stabilizing profiles). Never a wrong answer. CLI exit code 3.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lechlab

#endif
