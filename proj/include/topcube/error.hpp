#pragma once

#include <stdexcept>
#include <string>

namespace topcube {

/// Base class for every precondition or input error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands were built over different ground sets.
class UniverseMismatch : public Error {
 public:
  UniverseMismatch() : Error("operands live over different ground sets") {}
};

}  // namespace topcube
