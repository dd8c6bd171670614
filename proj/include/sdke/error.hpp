#pragma once

#include <stdexcept>
#include <string>

namespace sdke {

// Base for every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition (bad edge, foreign matching, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotMatchable : public Error {
 public:
  NotMatchable() : Error("graph is not matchable") {}
  using Error::Error;
};

// An exhaustive routine was asked to run past its configured size bound.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace sdke
