#pragma once

#include <stdexcept>
#include <string>

namespace turanp {

/// Raised when an operation's domain or precondition is violated.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a graph would exceed the fixed vertex cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw Error(message);
}

}  // namespace detail
}  // namespace turanp
